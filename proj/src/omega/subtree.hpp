#pragma once

#include <algorithm>
#include <vector>

#include "classent/omega.hpp"

namespace classent::omega::detail {

struct Partial {
  Dyadic omega;
  std::vector<BitString> census;
  std::uint64_t timeout_count = 0;
  std::uint64_t needs_more_count = 0;

  void merge(Partial&& o) {
    omega += o.omega;
    census.insert(census.end(), std::make_move_iterator(o.census.begin()), std::make_move_iterator(o.census.end()));
    timeout_count += o.timeout_count;
    needs_more_count += o.needs_more_count;
  }
};

/// Explores the pruned program tree below `root` down to depth `n`.
/// Nodes shallower than `stop_depth` are expanded; NEEDS_MORE nodes at
/// `stop_depth` (< n) are pushed to `frontier` instead.
inline void explore(const BitString& root, std::size_t n, std::uint64_t t, std::size_t stop_depth, Partial& out,
                    std::vector<BitString>* frontier) {
  std::vector<std::uint8_t> buf(root.bits());
  buf.reserve(n);
  // Iterative DFS: `next` holds the next child bit to try at each depth.
  std::vector<std::uint8_t> next;
  while (true) {
    const RunOutcome r = run_program(std::span<const std::uint8_t>(buf), t);
    bool descend = false;
    switch (r.kind) {
      case Outcome::kHalt:
        out.omega += Dyadic(1, static_cast<std::int32_t>(buf.size()));
        out.census.emplace_back(buf);
        break;
      case Outcome::kTimeout:
        ++out.timeout_count;
        break;
      case Outcome::kPrefixHalt:
        // Unreachable below a pruned HALT node; nothing to count.
        break;
      case Outcome::kNeedsMoreBits:
        if (buf.size() == n) {
          ++out.needs_more_count;
        } else if (frontier && buf.size() == stop_depth) {
          frontier->emplace_back(buf);
        } else {
          descend = true;
        }
        break;
    }
    if (descend) {
      buf.push_back(0);
      next.push_back(1);
      continue;
    }
    // Backtrack to the deepest level with an untried sibling.
    while (!next.empty() && next.back() == 2) {
      next.pop_back();
      buf.pop_back();
    }
    if (next.empty()) return;
    buf.back() = 1;
    next.back() = 2;
  }
}

inline void canonicalize(std::vector<BitString>& v) { std::sort(v.begin(), v.end()); }

}  // namespace classent::omega::detail
