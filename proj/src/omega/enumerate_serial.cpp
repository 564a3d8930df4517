#include <stdexcept>

#include "classent/omega.hpp"
#include "subtree.hpp"

namespace classent::omega {

OmegaResult compute_omega_serial(std::size_t n, std::uint64_t t) {
  if (n < 1 || n > 62) throw std::invalid_argument("max program length must be in [1, 62]");
  if (t < 1) throw std::invalid_argument("step budget must be positive");
  detail::Partial p;
  detail::explore(BitString{}, n, t, n, p, nullptr);
  detail::canonicalize(p.census);
  OmegaResult r;
  r.n = n;
  r.t = t;
  r.omega = p.omega;
  r.census = std::move(p.census);
  r.timeout_count = p.timeout_count;
  r.needs_more_count = p.needs_more_count;
  r.worker_count = 1;
  return r;
}

}  // namespace classent::omega
