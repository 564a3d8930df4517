#include "classent/omega.hpp"

namespace classent::omega {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kHalt:
      return "HALT";
    case Outcome::kPrefixHalt:
      return "PREFIX_HALT";
    case Outcome::kNeedsMoreBits:
      return "NEEDS_MORE_BITS";
    case Outcome::kTimeout:
      return "TIMEOUT";
  }
  return "TIMEOUT";
}

RunOutcome run_program(std::span<const std::uint8_t> program, std::uint64_t max_steps) {
  VmState s;
  while (true) {
    if (s.steps_executed == max_steps) return {Outcome::kTimeout, s.consumed_bits, s.steps_executed};
    const std::size_t ip = s.instruction_pointer;
    if (ip + 2 > s.consumed_bits) {
      if (ip + 2 > program.size()) return {Outcome::kNeedsMoreBits, s.consumed_bits, s.steps_executed};
      s.consumed_bits = ip + 2;
    }
    const unsigned op = (program[ip] << 1) | program[ip + 1];
    ++s.steps_executed;
    s.instruction_pointer += 2;
    switch (op) {
      case 0b00:
        if (s.consumed_bits == program.size()) return {Outcome::kHalt, s.consumed_bits, s.steps_executed};
        return {Outcome::kPrefixHalt, s.consumed_bits, s.steps_executed};
      case 0b01:
        ++s.reg;
        break;
      case 0b10:
        if (s.reg) --s.reg;
        break;
      case 0b11:
        if (s.reg) s.instruction_pointer = 0;
        break;
    }
  }
}

RunOutcome run_program(const BitString& program, std::uint64_t max_steps) {
  return run_program(std::span<const std::uint8_t>(program.bits()), max_steps);
}

}  // namespace classent::omega
