#pragma once

// Reference semantics for a single-write gate machine, written directly as
// bit twiddling on basis states. Knows nothing about Kronecker products.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

struct Gate {
  std::size_t bits = 0;
  std::vector<std::size_t> program;  // empty -> use `table`
  std::vector<std::size_t> read;
  std::size_t write = 0;
  std::vector<int> table;  // hard-wired truth table, index = read bits, first read bit most significant
};

inline int bit_at(std::uint32_t state, std::size_t pos, std::size_t bits) {
  // position 0 is the leftmost character of the state string
  return static_cast<int>((state >> (bits - 1 - pos)) & 1u);
}

/// state is the integer value of the bit string; returns the image state.
inline std::uint32_t step(const Gate& g, std::uint32_t state) {
  std::size_t idx = 0;
  for (auto r : g.read) idx = (idx << 1) | static_cast<std::size_t>(bit_at(state, r, g.bits));
  const int out = g.program.empty() ? g.table[idx] : bit_at(state, g.program[idx], g.bits);
  if (out) state ^= 1u << (g.bits - 1 - g.write);
  return state;
}

/// Matrix row/column of a basis state: |1...1> comes first.
inline std::size_t row_of(std::uint32_t state, std::size_t bits) {
  return (std::size_t{1} << bits) - 1 - state;
}

}  // namespace oracle
