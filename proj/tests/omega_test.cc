#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "classent/matrix_json.hpp"
#include "classent/omega.hpp"
#include "oracles/omega_oracle.hpp"

using namespace classent;
using namespace classent::omega;
using tensor::Dyadic;

namespace {

Dyadic as_dyadic(const oracle::BruteOmega& b, int n) { return Dyadic(static_cast<std::int64_t>(b.numerator), n); }

std::vector<std::string> strs(const std::vector<BitString>& v) {
  std::vector<std::string> out;
  for (const auto& b : v) out.push_back(b.str());
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("classent_" + name + "_" + std::to_string(::getpid()));
}

}  // namespace

TEST(vm, outcomes) {
  EXPECT_EQ(run_program(BitString::parse("00"), 10).kind, Outcome::kHalt);
  const auto early = run_program(BitString::parse("000"), 10);
  EXPECT_EQ(early.kind, Outcome::kPrefixHalt);
  EXPECT_EQ(early.consumed, 2u);
  EXPECT_EQ(run_program(BitString::parse("0111"), 10).kind, Outcome::kTimeout);
  EXPECT_EQ(run_program(BitString::parse("01"), 10).kind, Outcome::kNeedsMoreBits);
  EXPECT_EQ(run_program(BitString::parse("1100"), 10).kind, Outcome::kHalt);  // JNZ on zero falls through
  EXPECT_EQ(run_program(BitString::parse("00"), 0).kind, Outcome::kTimeout);
}

TEST(vm, step_budget_is_exact) {
  // INC HALT takes two steps
  EXPECT_EQ(run_program(BitString::parse("0100"), 2).kind, Outcome::kHalt);
  EXPECT_EQ(run_program(BitString::parse("0100"), 1).kind, Outcome::kTimeout);
}

TEST(omega, small_values) {
  EXPECT_EQ(compute_omega(2, 10).omega, Dyadic(1, 2));
  const auto r4 = compute_omega(4, 10);
  EXPECT_EQ(r4.omega, Dyadic(7, 4));
  EXPECT_EQ(strs(r4.census), (std::vector<std::string>{"00", "0100", "1000", "1100"}));
  EXPECT_EQ(compute_omega(1, 10).omega, Dyadic(0));
}

TEST(omega, matches_brute_force_oracle) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t t : {1ull, 3ull, 10ull, 64ull}) {
      const auto brute = oracle::brute_omega(n, t);
      const auto got = compute_omega(n, t);
      ASSERT_EQ(got.omega, as_dyadic(brute, n)) << "n=" << n << " t=" << t;
      ASSERT_EQ(strs(got.census), brute.halting) << "n=" << n << " t=" << t;
      ASSERT_EQ(compute_omega_serial(n, t).omega, got.omega);
    }
  }
}

TEST(omega, kraft_bound) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t t : {16ull * n, 1024ull}) {
      EXPECT_LE(compute_omega(n, t, {.workers = 4}).omega, Dyadic(1)) << n << " " << t;
    }
  }
}

TEST(omega, monotone_in_length_and_budget) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 1 + rng() % 10;
    const std::uint64_t t = 1 + rng() % 200;
    const auto base = compute_omega(n, t).omega;
    EXPECT_LE(base, compute_omega(n + 1, t).omega);
    EXPECT_LE(base, compute_omega(n, t + 1 + rng() % 50).omega);
  }
}

TEST(omega, census_is_prefix_free) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto census = compute_omega(n, default_step_budget(n)).census;
    for (std::size_t i = 0; i < census.size(); ++i)
      for (std::size_t j = 0; j < census.size(); ++j)
        if (i != j) ASSERT_FALSE(census[i].is_prefix_of(census[j])) << census[i].str() << " " << census[j].str();
  }
}

TEST(omega, worker_count_invisible) {
  const auto one = result_to_json(compute_omega(14, 224, {.workers = 1})).dump();
  for (int w : {4, 8}) {
    EXPECT_EQ(result_to_json(compute_omega(14, 224, {.workers = w})).dump(), one) << w;
    EXPECT_EQ(result_to_json(compute_omega(14, 224, {.workers = w, .split_depth = 3})).dump(), one) << w;
  }
}

TEST(omega, interrupt_and_resume) {
  const auto path = temp_path("resume.json");
  const auto full = result_to_json(compute_omega(14, 224)).dump();
  EnumerationOptions opts{.workers = 2, .checkpoint_path = path, .checkpoint_every = 8, .stop_after_tasks = 20};
  EXPECT_THROW(compute_omega(14, 224, opts), EnumerationInterrupted);
  auto cp = read_checkpoint(path);
  EXPECT_FALSE(cp.frontier.empty());
  // resume in several hops, then finish
  opts.stop_after_tasks = 30;
  while (true) {
    try {
      const auto r = resume_omega(cp, opts);
      EXPECT_EQ(result_to_json(r).dump(), full);
      break;
    } catch (const EnumerationInterrupted& e) {
      cp = read_checkpoint(path);
      EXPECT_EQ(checkpoint_to_json(cp), checkpoint_to_json(e.checkpoint));
    }
  }
  std::filesystem::remove(path);
}

TEST(omega, corrupt_checkpoint_rejected) {
  const auto path = temp_path("corrupt.json");
  EnumerationOptions opts{.checkpoint_path = path, .checkpoint_every = 4, .stop_after_tasks = 8};
  EXPECT_THROW(compute_omega(12, 100, opts), EnumerationInterrupted);
  auto j = checkpoint_to_json(read_checkpoint(path));

  auto bad = j;
  bad["omega"] = tensor::dyadic_to_json(Dyadic(1));
  EXPECT_THROW(checkpoint_from_json(bad), std::invalid_argument);
  bad = j;
  bad["format_version"] = 99;
  EXPECT_THROW(checkpoint_from_json(bad), std::invalid_argument);
  bad = j;
  bad["frontier"].push_back("0101010101010101");
  EXPECT_THROW(checkpoint_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("census");
  EXPECT_THROW(checkpoint_from_json(bad), std::invalid_argument);

  std::ofstream(path) << "{ \"n\": 12, truncated";
  EXPECT_THROW(read_checkpoint(path), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST(omega, tail_report_bound) {
  const auto r = tail_report(2, 4, 10);
  EXPECT_EQ(r.delta, Dyadic(3, 4));
  EXPECT_EQ(r.bound, Dyadic(1, 2));
  EXPECT_TRUE(r.bound_satisfied);
  EXPECT_EQ(tail_report(5, 5, 80).delta, Dyadic(0));
  // (4, 8, 256) against the brute-force oracle; the bound is only reported
  const auto r48 = tail_report(4, 8, 256);
  const auto d = Dyadic(static_cast<std::int64_t>(oracle::brute_omega(8, 256).numerator), 8) -
                 Dyadic(static_cast<std::int64_t>(oracle::brute_omega(4, 256).numerator), 4);
  EXPECT_EQ(r48.delta, d);
  EXPECT_EQ(r48.bound_satisfied, d <= Dyadic(1, 4));
}

TEST(omega, rejects_bad_bounds) {
  EXPECT_THROW(compute_omega(0, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(63, 10), std::invalid_argument);
  EXPECT_THROW(compute_omega(4, 0), std::invalid_argument);
  EXPECT_THROW(compute_omega(4, 10, {.workers = 0}), std::invalid_argument);
}
