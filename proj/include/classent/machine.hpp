#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classent/bitstring.hpp"
#include "classent/exact_matrix.hpp"

namespace classent::machine {

using tensor::ExactMatrix;

/// An n -> 1 logic table: table[i] is the output bit for the input whose
/// read bits spell the integer i (most significant read bit first).
///
/// A table with no bits stands for a program held in the register itself
/// (see MachineLayout::program_bits); only its arity is meaningful then.
struct ProgramTable {
  std::size_t arity = 0;
  BitString table;

  /// "0110" -> arity 2. Length must be a power of two >= 2.
  static ProgramTable parse(std::string_view bits);
  static ProgramTable from_register(std::size_t arity) { return ProgramTable{arity, {}}; }
  bool hardwired() const { return !table.empty(); }
};

/// Which register bits a machine reads its program from, conditions on, and
/// flips. Positions count from the leftmost register bit.
struct MachineLayout {
  std::size_t register_bits = 0;
  std::vector<std::size_t> program_bits;
  std::vector<std::size_t> read_bits;
  std::vector<std::size_t> write_bits;

  /// Throws std::invalid_argument on out-of-range positions, duplicates, or
  /// overlapping roles (a machine never writes its own program or inputs).
  void validate() const;
};

struct CompiledOperator {
  ExactMatrix matrix;
  MachineLayout layout;
  std::string source;

  std::size_t register_bits() const { return layout.register_bits; }
};

/// Realizes  sum_programs P_program (x) sum_i P_i (x) sigma_x^{m_i}  on the
/// full register, one 2x2 factor per bit position.
CompiledOperator compile_gate_operator(const ProgramTable& program, const MachineLayout& layout);

/// COPY pair on two bits: U copies left into right, V copies right into left.
std::pair<CompiledOperator, CompiledOperator> build_copy_pair();

/// Four-bit pair: T1 reads its program from bits 0,1 and runs a 1 -> 1 gate
/// from bit 2 into bit 3; T2 reads its program from bits 2,3 and runs the
/// same family from bit 0 into bit 1.
std::pair<CompiledOperator, CompiledOperator> build_appendix_machines();

/// Names: copy, cnot, copy_pair_U, copy_pair_V, appendix_T1, appendix_T2.
CompiledOperator builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

/// The basis state the permutation sends `state` to.
BitString apply_operator(const CompiledOperator& op, const BitString& state);

}  // namespace classent::machine
