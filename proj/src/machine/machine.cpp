#include "classent/machine.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace classent::machine {

using tensor::Dyadic;

namespace {

enum class Role { kIdle, kProgram, kRead, kWrite };

const ExactMatrix& factor_identity() {
  static const ExactMatrix m = ExactMatrix::identity(2);
  return m;
}

const ExactMatrix& factor_flip() {
  static const ExactMatrix m = tensor::pauli_x();
  return m;
}

const ExactMatrix& factor_projector(std::uint8_t bit) {
  static const ExactMatrix p0 = tensor::projector(BitString::parse("0"));
  static const ExactMatrix p1 = tensor::projector(BitString::parse("1"));
  return bit ? p1 : p0;
}

}  // namespace

ProgramTable ProgramTable::parse(std::string_view bits) {
  BitString table = BitString::parse(bits);
  if (table.size() < 2 || !std::has_single_bit(table.size())) {
    throw std::invalid_argument("logic table length must be a power of two >= 2, got " +
                                std::to_string(table.size()));
  }
  return ProgramTable{static_cast<std::size_t>(std::countr_zero(table.size())), std::move(table)};
}

void MachineLayout::validate() const {
  if (register_bits == 0) throw std::invalid_argument("layout: register_bits must be positive");
  if (register_bits > 12) throw std::invalid_argument("layout: registers wider than 12 bits are not supported");
  std::set<std::size_t> seen;
  auto claim = [&](const std::vector<std::size_t>& bits, const char* role) {
    for (auto b : bits) {
      if (b >= register_bits) {
        throw std::invalid_argument(std::string("layout: ") + role + " bit " + std::to_string(b) +
                                    " outside a " + std::to_string(register_bits) + "-bit register");
      }
      if (!seen.insert(b).second) {
        throw std::invalid_argument(std::string("layout: bit ") + std::to_string(b) + " has more than one role (" +
                                    role + ")");
      }
    }
  };
  claim(program_bits, "program");
  claim(read_bits, "read");
  claim(write_bits, "write");
  if (read_bits.empty()) throw std::invalid_argument("layout: at least one read bit required");
  if (write_bits.size() != 1) throw std::invalid_argument("layout: exactly one write bit required");
}

CompiledOperator compile_gate_operator(const ProgramTable& program, const MachineLayout& layout) {
  layout.validate();
  const std::size_t arity = program.arity;
  if (layout.read_bits.size() != arity) {
    throw std::invalid_argument("program arity " + std::to_string(arity) + " does not match " +
                                std::to_string(layout.read_bits.size()) + " read bits");
  }
  const std::size_t table_len = std::size_t{1} << arity;
  if (program.hardwired()) {
    if (program.table.size() != table_len) throw std::invalid_argument("logic table length does not match arity");
    if (!layout.program_bits.empty()) {
      throw std::invalid_argument("a hard-wired table cannot also be read from program bits");
    }
  } else if (layout.program_bits.size() != table_len) {
    throw std::invalid_argument("program space needs " + std::to_string(table_len) + " bits, layout has " +
                                std::to_string(layout.program_bits.size()));
  }

  const std::size_t n = layout.register_bits;
  std::vector<Role> role(n, Role::kIdle);
  std::vector<std::size_t> slot(n, 0);  // index within its role list
  for (std::size_t j = 0; j < layout.program_bits.size(); ++j) {
    role[layout.program_bits[j]] = Role::kProgram;
    slot[layout.program_bits[j]] = j;
  }
  for (std::size_t j = 0; j < arity; ++j) {
    role[layout.read_bits[j]] = Role::kRead;
    slot[layout.read_bits[j]] = j;
  }
  role[layout.write_bits[0]] = Role::kWrite;

  const std::size_t dim = std::size_t{1} << n;
  ExactMatrix total(dim, dim);
  const std::size_t program_states = program.hardwired() ? 1 : (std::size_t{1} << table_len);
  for (std::size_t pm = 0; pm < program_states; ++pm) {
    const BitString table = program.hardwired() ? program.table : BitString::from_value(pm, table_len);
    for (std::size_t i = 0; i < table_len; ++i) {
      const BitString input = BitString::from_value(i, arity);
      ExactMatrix term = ExactMatrix::identity(1);
      for (std::size_t pos = 0; pos < n; ++pos) {
        switch (role[pos]) {
          case Role::kIdle:
            term = tensor::kron(term, factor_identity());
            break;
          case Role::kProgram:
            term = tensor::kron(term, factor_projector(table[slot[pos]]));
            break;
          case Role::kRead:
            term = tensor::kron(term, factor_projector(input[slot[pos]]));
            break;
          case Role::kWrite:
            term = tensor::kron(term, table[i] ? factor_flip() : factor_identity());
            break;
        }
      }
      total += term;
    }
  }

  std::string source = program.hardwired() ? "table:" + program.table.str()
                                           : "register-programmed arity " + std::to_string(arity);
  return CompiledOperator{std::move(total), layout, std::move(source)};
}

std::pair<CompiledOperator, CompiledOperator> build_copy_pair() {
  const auto copy = ProgramTable::parse("01");
  auto u = compile_gate_operator(copy, MachineLayout{2, {}, {0}, {1}});
  auto v = compile_gate_operator(copy, MachineLayout{2, {}, {1}, {0}});
  u.source = "copy_pair_U";
  v.source = "copy_pair_V";
  return {std::move(u), std::move(v)};
}

std::pair<CompiledOperator, CompiledOperator> build_appendix_machines() {
  const auto family = ProgramTable::from_register(1);
  auto t1 = compile_gate_operator(family, MachineLayout{4, {0, 1}, {2}, {3}});
  auto t2 = compile_gate_operator(family, MachineLayout{4, {2, 3}, {0}, {1}});
  t1.source = "appendix_T1";
  t2.source = "appendix_T2";
  return {std::move(t1), std::move(t2)};
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"copy",        "cnot",        "copy_pair_U",
                                                 "copy_pair_V", "appendix_T1", "appendix_T2"};
  return names;
}

CompiledOperator builtin(std::string_view name) {
  if (name == "copy") {
    auto op = compile_gate_operator(ProgramTable::parse("01"), MachineLayout{2, {}, {0}, {1}});
    op.source = "copy";
    return op;
  }
  if (name == "cnot") {
    auto op = compile_gate_operator(ProgramTable::parse("0110"), MachineLayout{3, {}, {0, 1}, {2}});
    op.source = "cnot";
    return op;
  }
  if (name == "copy_pair_U") return build_copy_pair().first;
  if (name == "copy_pair_V") return build_copy_pair().second;
  if (name == "appendix_T1") return build_appendix_machines().first;
  if (name == "appendix_T2") return build_appendix_machines().second;
  throw std::invalid_argument("unknown builtin machine '" + std::string(name) + "'");
}

BitString apply_operator(const CompiledOperator& op, const BitString& state) {
  if (state.size() != op.register_bits()) {
    throw std::invalid_argument("state has " + std::to_string(state.size()) + " bits, operator acts on " +
                                std::to_string(op.register_bits()));
  }
  const std::size_t col = tensor::basis_index(state);
  const Dyadic one(1);
  std::size_t hit = op.matrix.rows();
  for (std::size_t r = 0; r < op.matrix.rows(); ++r) {
    const Dyadic& x = op.matrix(r, col);
    if (x.is_zero()) continue;
    if (x != one || hit != op.matrix.rows()) throw std::invalid_argument("operator is not a permutation");
    hit = r;
  }
  if (hit == op.matrix.rows()) throw std::invalid_argument("operator annihilates the state");
  return tensor::basis_state(hit, op.register_bits());
}

}  // namespace classent::machine
