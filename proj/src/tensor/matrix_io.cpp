#include <bit>
#include <sstream>
#include <stdexcept>

#include "classent/exact_matrix.hpp"
#include "classent/matrix_json.hpp"

namespace classent::tensor {

std::string to_text(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

ExactMatrix parse_text(std::string_view text) {
  std::vector<Dyadic> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::size_t count = 0;
    while (true) {
      const auto sp = line.find(' ');
      const std::string_view tok = line.substr(0, sp);
      try {
        entries.push_back(Dyadic::parse(tok));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
      ++count;
      if (sp == std::string_view::npos) break;
      line = line.substr(sp + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                  " entries, found " + std::to_string(count));
    }
    ++rows;
  }
  return ExactMatrix(rows, cols, std::move(entries));
}

nlohmann::json dyadic_to_json(const Dyadic& d) { return nlohmann::json::array({d.numerator(), d.exponent()}); }

Dyadic dyadic_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("dyadic value must be [numerator, denominator_exponent]");
  }
  const auto exp = j[1].get<std::int64_t>();
  if (exp < 0 || exp > 4096) throw std::invalid_argument("denominator exponent out of range");
  return Dyadic(j[0].get<std::int64_t>(), static_cast<std::int32_t>(exp));
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& x : m.entries()) entries.push_back(dyadic_to_json(x));
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["register_bits"] = std::has_single_bit(m.rows()) ? std::countr_zero(m.rows()) : 0;
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw std::invalid_argument("matrix entries do not match rows x cols");
  }
  if (j.contains("register_bits") && std::has_single_bit(rows)) {
    if (j["register_bits"].get<std::size_t>() != static_cast<std::size_t>(std::countr_zero(rows))) {
      throw std::invalid_argument("register_bits inconsistent with rows");
    }
  }
  std::vector<Dyadic> data;
  data.reserve(entries.size());
  for (const auto& e : entries) data.push_back(dyadic_from_json(e));
  return ExactMatrix(rows, cols, std::move(data));
}

}  // namespace classent::tensor
