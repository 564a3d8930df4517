#include <stdexcept>

#include "classent/machine_json.hpp"

namespace classent::machine {

namespace {

std::vector<std::size_t> positions(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("machine description: '") + key + "' must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned()) {
      throw std::invalid_argument(std::string("machine description: '") + key + "' entries must be bit positions");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

CompiledOperator machine_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("machine description must be a JSON object");
  if (j.contains("builtin")) {
    if (j.contains("program_table")) {
      throw std::invalid_argument("machine description: give either 'builtin' or 'program_table', not both");
    }
    auto op = builtin(j.at("builtin").get<std::string>());
    if (j.contains("register_bits") && j["register_bits"].get<std::size_t>() != op.register_bits()) {
      throw std::invalid_argument("machine description: register_bits does not match builtin '" + op.source + "'");
    }
    return op;
  }
  if (!j.contains("register_bits")) throw std::invalid_argument("machine description: missing 'register_bits'");
  MachineLayout layout;
  layout.register_bits = j.at("register_bits").get<std::size_t>();
  layout.program_bits = positions(j, "program_bits");
  layout.read_bits = positions(j, "read_bits");
  layout.write_bits = positions(j, "write_bits");
  ProgramTable program;
  if (j.contains("program_table")) {
    program = ProgramTable::parse(j.at("program_table").get<std::string>());
  } else {
    program = ProgramTable::from_register(layout.read_bits.size());
  }
  return compile_gate_operator(program, layout);
}

CompiledOperator machine_from_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("machine description: ") + e.what());
  }
  try {
    return machine_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("machine description: ") + e.what());
  }
}

nlohmann::json layout_to_json(const MachineLayout& layout) {
  return {{"register_bits", layout.register_bits},
          {"program_bits", layout.program_bits},
          {"read_bits", layout.read_bits},
          {"write_bits", layout.write_bits}};
}

}  // namespace classent::machine
