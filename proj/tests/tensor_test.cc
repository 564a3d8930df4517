#include <gtest/gtest.h>

#include <random>

#include "classent/exact_matrix.hpp"
#include "classent/matrix_json.hpp"

using namespace classent;
using namespace classent::tensor;

TEST(dyadic, canonical_form) {
  EXPECT_EQ(Dyadic(4, 4), Dyadic(1, 2));
  EXPECT_EQ(Dyadic(0, 9).exponent(), 0);
  EXPECT_EQ(Dyadic(6, 0), Dyadic(3, -1));
  EXPECT_EQ(Dyadic(1, 2) + Dyadic(3, 4), Dyadic(7, 4));
  EXPECT_EQ(Dyadic(1, 2) * Dyadic(1, 2), Dyadic(1, 4));
  EXPECT_EQ(Dyadic(1, 2) - Dyadic(1, 1), Dyadic(-1, 2));
  EXPECT_LT(Dyadic(1, 3), Dyadic(1, 2));
  EXPECT_EQ(Dyadic(7, 4).str(), "7/2^4");
}

TEST(dyadic, parse) {
  EXPECT_EQ(Dyadic::parse("3"), Dyadic(3));
  EXPECT_EQ(Dyadic::parse("-3/2^5"), Dyadic(-3, 5));
  EXPECT_EQ(Dyadic::parse("1/16"), Dyadic(1, 4));
  EXPECT_ANY_THROW(Dyadic::parse("1/3"));
  EXPECT_ANY_THROW(Dyadic::parse("x"));
}

TEST(dyadic, overflow_is_loud) {
  const Dyadic big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(basis, ordering) {
  // |1...1> is the first row, |0...0> the last
  EXPECT_EQ(basis_index(BitString::parse("11")), 0u);
  EXPECT_EQ(basis_index(BitString::parse("00")), 3u);
  EXPECT_EQ(basis_index(BitString::parse("10")), 1u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(basis_index(basis_state(i, 4)), i);
  EXPECT_EQ(basis_vector(BitString::parse("0")), ExactMatrix::from_ints({{0}, {1}}));
  EXPECT_EQ(basis_vector(BitString::parse("1")), ExactMatrix::from_ints({{1}, {0}}));
}

TEST(kron, basis_vectors_compose) {
  const auto a = BitString::parse("10");
  const auto b = BitString::parse("011");
  EXPECT_EQ(kron(basis_vector(a), basis_vector(b)), basis_vector(a.concat(b)));
  EXPECT_EQ(kron(pauli_x(), ExactMatrix::identity(2)).rows(), 4u);
}

TEST(determinant, small_cases) {
  EXPECT_EQ(determinant(ExactMatrix::identity(5)), Dyadic(1));
  EXPECT_EQ(determinant(pauli_x()), Dyadic(-1));
  EXPECT_EQ(determinant(ExactMatrix::from_ints({{1, 2}, {3, 4}}, 2)), Dyadic(-2, 4));
  EXPECT_EQ(determinant(ExactMatrix::from_ints({{1, 2}, {2, 4}})), Dyadic(0));
  EXPECT_EQ(determinant(kron(pauli_x(), pauli_x())), Dyadic(1));
}

TEST(partial_trace, product_state) {
  const auto a = ExactMatrix::from_ints({{1, 2}, {3, 4}});
  const auto b = ExactMatrix::from_ints({{5, 0}, {1, 7}});
  EXPECT_EQ(partial_trace(kron(a, b), {0}), a * Dyadic(12));
  EXPECT_EQ(partial_trace(kron(a, b), {1}), b * Dyadic(5));
  EXPECT_THROW(partial_trace(kron(a, b), {0, 1}), std::invalid_argument);
  EXPECT_THROW(partial_trace(kron(a, b), {}), std::invalid_argument);
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-64, 64);
  std::uniform_int_distribution<int> exp(0, 6);
  ExactMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = Dyadic(num(rng), exp(rng));
  return m;
}

TEST(partial_trace, preserves_trace_random) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<std::size_t> bits(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + bits(rng);
    const auto m = random_matrix(rng, std::size_t{1} << n);
    std::set<std::size_t> keep;
    while (keep.empty() || keep.size() == n) {
      keep.clear();
      for (std::size_t b = 0; b < n; ++b)
        if (rng() & 1) keep.insert(b);
    }
    const auto reduced = partial_trace(m, keep);
    ASSERT_EQ(reduced.rows(), std::size_t{1} << keep.size());
    ASSERT_EQ(trace(reduced), trace(m)) << "iteration " << iter;
  }
}

TEST(io, text_and_json_round_trip) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const auto m = random_matrix(rng, std::size_t{1} << (iter % 4));
    EXPECT_EQ(parse_text(to_text(m)), m);
    EXPECT_EQ(matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump())), m);
  }
}

TEST(io, text_errors_name_the_line) {
  try {
    parse_text("1 0\n0 1/3\n");
    FAIL() << "accepted a non-dyadic entry";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(predicates, permutation_and_orthogonal) {
  EXPECT_TRUE(is_permutation_matrix(pauli_x()));
  EXPECT_TRUE(is_orthogonal(pauli_x()));
  EXPECT_FALSE(is_permutation_matrix(ExactMatrix::from_ints({{1, 1}, {0, 1}})));
  EXPECT_TRUE(is_orthogonal(ExactMatrix::from_ints({{1, 0}, {0, -1}})));
}
