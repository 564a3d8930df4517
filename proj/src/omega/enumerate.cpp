#include <omp.h>

#include <chrono>
#include <stdexcept>

#include "classent/omega.hpp"
#include "subtree.hpp"

namespace classent::omega {

namespace {

void validate_bounds(std::size_t n, std::uint64_t t, const EnumerationOptions& options) {
  if (n < 1 || n > 62) throw std::invalid_argument("max program length must be in [1, 62]");
  if (t < 1) throw std::invalid_argument("step budget must be positive");
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (options.checkpoint_every < 1) throw std::invalid_argument("checkpoint interval must be at least 1");
}

OmegaResult finish(const EnumerationCheckpoint& cp, int workers) {
  OmegaResult r;
  r.n = cp.n;
  r.t = cp.t;
  r.omega = cp.omega;
  r.census = cp.census;
  detail::canonicalize(r.census);
  r.timeout_count = cp.timeout_count;
  r.needs_more_count = cp.needs_more_count;
  r.worker_count = workers;
  return r;
}

/// Drains the frontier batch by batch. Each batch runs in parallel; partial
/// sums are merged in frontier order, and the census is sorted at the end,
/// so the schedule never shows in the result.
OmegaResult run_frontier(EnumerationCheckpoint cp, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t done_here = 0;
  std::size_t cursor = 0;
  const std::size_t total = cp.frontier.size();

  while (cursor < total) {
    const bool out_of_time =
        options.time_limit_seconds &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *options.time_limit_seconds;
    const bool task_cap = options.stop_after_tasks && done_here >= *options.stop_after_tasks;
    if (out_of_time || task_cap) {
      cp.frontier.erase(cp.frontier.begin(), cp.frontier.begin() + static_cast<std::ptrdiff_t>(cursor));
      detail::canonicalize(cp.census);
      if (options.checkpoint_path) write_checkpoint(*options.checkpoint_path, cp);
      throw EnumerationInterrupted(std::string("enumeration stopped with ") + std::to_string(cp.frontier.size()) +
                                       " subtrees left" + (out_of_time ? " (time limit)" : " (task limit)"),
                                   std::move(cp));
    }

    std::size_t batch = std::min(options.checkpoint_every, total - cursor);
    if (options.stop_after_tasks) batch = std::min(batch, *options.stop_after_tasks - done_here);
    std::vector<detail::Partial> parts(batch);
    const auto tasks = static_cast<std::ptrdiff_t>(batch);
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
    for (std::ptrdiff_t i = 0; i < tasks; ++i) {
      detail::explore(cp.frontier[cursor + static_cast<std::size_t>(i)], cp.n, cp.t, cp.n, parts[i], nullptr);
    }
    detail::Partial merged;
    merged.omega = cp.omega;
    merged.census = std::move(cp.census);
    merged.timeout_count = cp.timeout_count;
    merged.needs_more_count = cp.needs_more_count;
    for (auto& p : parts) merged.merge(std::move(p));
    cp.omega = merged.omega;
    cp.census = std::move(merged.census);
    cp.timeout_count = merged.timeout_count;
    cp.needs_more_count = merged.needs_more_count;
    cursor += batch;
    done_here += batch;

    if (options.checkpoint_path) {
      EnumerationCheckpoint snapshot = cp;
      snapshot.frontier.erase(snapshot.frontier.begin(),
                              snapshot.frontier.begin() + static_cast<std::ptrdiff_t>(cursor));
      detail::canonicalize(snapshot.census);
      write_checkpoint(*options.checkpoint_path, snapshot);
    }
  }
  cp.frontier.clear();
  return finish(cp, options.workers);
}

}  // namespace

OmegaResult compute_omega(std::size_t n, std::uint64_t t, const EnumerationOptions& options) {
  validate_bounds(n, t, options);
  EnumerationCheckpoint cp;
  cp.n = n;
  cp.t = t;
  detail::Partial top;
  const std::size_t depth = std::min(options.split_depth, n);
  detail::explore(BitString{}, n, t, depth, top, &cp.frontier);
  detail::canonicalize(cp.frontier);
  cp.omega = top.omega;
  cp.census = std::move(top.census);
  cp.timeout_count = top.timeout_count;
  cp.needs_more_count = top.needs_more_count;
  return run_frontier(std::move(cp), options);
}

OmegaResult resume_omega(const EnumerationCheckpoint& checkpoint, const EnumerationOptions& options) {
  validate_bounds(checkpoint.n, checkpoint.t, options);
  return run_frontier(checkpoint, options);
}

TailReport tail_report(std::size_t n_small, std::size_t n_large, std::uint64_t t, int workers) {
  if (n_small > n_large) throw std::invalid_argument("tail report needs n_small <= n_large");
  EnumerationOptions opts;
  opts.workers = workers;
  const Dyadic small = compute_omega(n_small, t, opts).omega;
  const Dyadic large = n_large == n_small ? small : compute_omega(n_large, t, opts).omega;
  TailReport r;
  r.delta = large - small;
  r.bound = Dyadic(1, static_cast<std::int32_t>(n_small));
  r.bound_satisfied = r.delta <= r.bound;
  return r;
}

}  // namespace classent::omega
