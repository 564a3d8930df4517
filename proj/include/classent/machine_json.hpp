#pragma once

#include <json.hpp>
#include <string_view>

#include "classent/machine.hpp"

namespace classent::machine {

/// Machine description document:
///   {register_bits, program_bits, read_bits, write_bits, program_table}
/// or {builtin: name} (layout fields then optional but checked if present).
CompiledOperator machine_from_json(const nlohmann::json& j);
/// Parses text, reporting JSON syntax errors with line/column.
CompiledOperator machine_from_text(std::string_view text);
nlohmann::json layout_to_json(const MachineLayout& layout);

}  // namespace classent::machine
