#pragma once

#include <json.hpp>

#include "classent/dyadic.hpp"
#include "classent/exact_matrix.hpp"

namespace classent::tensor {

/// [numerator, denominator_exponent]
nlohmann::json dyadic_to_json(const Dyadic& d);
Dyadic dyadic_from_json(const nlohmann::json& j);

/// {rows, cols, register_bits, entries: [[num, exp], ...]} in row-major order.
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace classent::tensor
