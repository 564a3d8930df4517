#pragma once

// Unpruned brute force for the finite halting probability. Every program of
// every length up to n is run from scratch by its own tiny interpreter; no
// prefix sharing, no pruning.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

enum class Ending { Halt, EarlyHalt, Starved, OutOfSteps };

/// program bits are the low `len` bits of `code`, first bit most significant.
inline Ending run(std::uint64_t code, int len, std::uint64_t budget) {
  std::uint64_t acc = 0, steps = 0;
  int pc = 0, read_to = 0;
  for (;;) {
    if (steps >= budget) return Ending::OutOfSteps;
    if (pc + 2 > len) return Ending::Starved;
    if (pc + 2 > read_to) read_to = pc + 2;
    const int hi = static_cast<int>((code >> (len - 1 - pc)) & 1);
    const int lo = static_cast<int>((code >> (len - 2 - pc)) & 1);
    pc += 2;
    ++steps;
    if (!hi && !lo) return read_to == len ? Ending::Halt : Ending::EarlyHalt;
    if (!hi && lo) acc++;
    if (hi && !lo && acc > 0) acc--;
    if (hi && lo && acc != 0) pc = 0;
  }
}

struct BruteOmega {
  // numerator over 2^n
  std::uint64_t numerator = 0;
  std::vector<std::string> halting;
};

inline BruteOmega brute_omega(int n, std::uint64_t budget) {
  BruteOmega out;
  for (int len = 1; len <= n; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      if (run(code, len, budget) != Ending::Halt) continue;
      out.numerator += std::uint64_t{1} << (n - len);
      std::string s;
      for (int i = len - 1; i >= 0; --i) s += ((code >> i) & 1) ? '1' : '0';
      out.halting.push_back(s);
    }
  }
  return out;
}

}  // namespace oracle
