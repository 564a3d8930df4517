#include <gtest/gtest.h>

#include <numbers>

#include "classent/eigen.hpp"

using namespace classent::tensor;

namespace {

bool parallel(const ComplexVector& v, std::vector<double> w) {
  // same ray after max-normalisation
  ComplexVector u(w.begin(), w.end());
  normalize_max_component(u);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i] - u[i]) > 1e-9) return false;
  return true;
}

}  // namespace

TEST(charpoly, two_by_two) {
  // det(xI - M) = x^2 - tr x + det
  const auto m = ExactMatrix::from_ints({{0, 0}, {1, 1}}, 2);
  const auto p = characteristic_polynomial(m);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], Dyadic(0));
  EXPECT_EQ(p[1], Dyadic(-1, 2));
  EXPECT_EQ(p[2], Dyadic(1));
}

TEST(eigen, reduced_left_has_ghost) {
  const auto rho_l = ExactMatrix::from_ints({{0, 0}, {1, 1}}, 2);
  const auto rep = eigen_decompose(rho_l, true);
  ASSERT_EQ(rep.right.size(), 2u);
  bool saw_zero = false, saw_quarter = false;
  for (const auto& p : rep.right) {
    ASSERT_TRUE(p.exact_value.has_value());
    if (*p.exact_value == Dyadic(0)) {
      saw_zero = true;
      EXPECT_TRUE(p.ghost);
      EXPECT_TRUE(parallel(p.vector, {1, -1}));
    } else {
      saw_quarter = true;
      EXPECT_EQ(*p.exact_value, Dyadic(1, 2));
      EXPECT_TRUE(parallel(p.vector, {0, 1}));  // |0>
    }
  }
  EXPECT_TRUE(saw_zero && saw_quarter);
  EXPECT_TRUE(rep.has_ghost());
}

TEST(eigen, identity_is_trivial) {
  const auto rep = eigen_decompose(ExactMatrix::identity(4), true);
  for (const auto& p : rep.right) {
    EXPECT_EQ(*p.exact_value, Dyadic(1));
    EXPECT_FALSE(p.ghost);
  }
  EXPECT_EQ(rep.right.size(), 4u);
}

TEST(eigen, three_cycle_spectrum) {
  // cyclic permutation on 3 of 4 basis states
  const auto m = ExactMatrix::from_ints({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto rep = eigen_decompose(m);
  ASSERT_EQ(rep.eigenvalues.size(), 4u);
  int ones = 0, pair = 0;
  for (auto z : rep.eigenvalues) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
    if (std::abs(z - 1.0) < 1e-10) ++ones;
    if (std::abs(std::abs(std::arg(z)) - 2 * std::numbers::pi / 3) < 1e-10) ++pair;
  }
  EXPECT_EQ(ones, 2);
  EXPECT_EQ(pair, 2);
}

TEST(eigen, large_permutation_unit_modulus) {
  // 8x8 cyclic shift goes through the numeric path
  ExactMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m((i + 1) % 8, i) = Dyadic(1);
  const auto rep = eigen_decompose(m);
  EXPECT_FALSE(rep.exact_path);
  for (auto z : rep.eigenvalues) EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
}

TEST(eigen, residuals_hold) {
  const auto m = ExactMatrix::from_ints({{2, 1, 0}, {0, 2, 0}, {1, 0, 3}}, 1);
  const auto rep = eigen_decompose(m, true);
  for (const auto& p : rep.right) {
    for (std::size_t r = 0; r < 3; ++r) {
      Complex acc = 0;
      for (std::size_t c = 0; c < 3; ++c) acc += m(r, c).to_double() * p.vector[c];
      EXPECT_LT(std::abs(acc - p.value * p.vector[r]), 1e-9);
    }
  }
}
