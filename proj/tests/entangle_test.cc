#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "classent/entangle.hpp"
#include "classent/machine.hpp"

using namespace classent;
using namespace classent::lab;
using tensor::Dyadic;
using tensor::ExactMatrix;

namespace {

struct CopyPair : ::testing::Test {
  machine::CompiledOperator u = machine::build_copy_pair().first;
  machine::CompiledOperator v = machine::build_copy_pair().second;
  AnalysisReport rep = analyze_pair(u, v, BitSplit::halves(2));
};

}  // namespace

TEST_F(CopyPair, operator_identities) {
  const auto id = ExactMatrix::identity(4);
  EXPECT_EQ(u.matrix * tensor::transpose(u.matrix), id);
  EXPECT_EQ(v.matrix * v.matrix, id);
  EXPECT_EQ(rep.det_u, Dyadic(-1));
  EXPECT_EQ(rep.det_v, Dyadic(-1));
  const auto rho = uniform_density(2);
  EXPECT_EQ(u.matrix * rho * tensor::transpose(u.matrix), rho);
}

TEST_F(CopyPair, illegal_product) {
  EXPECT_EQ(rep.illegal.rho_uv, Dyadic(1, 2) * (u.matrix * v.matrix));
  EXPECT_EQ(rep.illegal.trace_uv, Dyadic(1, 2));
  EXPECT_EQ(rep.illegal.trace_vu, Dyadic(1, 2));
  EXPECT_EQ(tensor::transpose(rep.illegal.rho_uv), rep.illegal.rho_vu);
  const auto scaled = rep.illegal.rho_uv * Dyadic(4);
  EXPECT_TRUE(tensor::is_orthogonal(scaled));
  EXPECT_EQ(tensor::determinant(scaled), Dyadic(1));
  EXPECT_EQ(rep.illegal.product_identity, ExactMatrix::identity(4) * Dyadic(1, 4));
}

TEST_F(CopyPair, reduced_matrices) {
  EXPECT_EQ(rep.reduced_left, ExactMatrix::from_ints({{0, 0}, {1, 1}}, 2));
  EXPECT_EQ(rep.reduced_right, ExactMatrix::from_ints({{0, 1}, {0, 1}}, 2));
  EXPECT_EQ(rep.reduced_right, tensor::transpose(rep.reduced_left));
}

TEST_F(CopyPair, checks_and_ledger) {
  for (const auto& c : rep.checks) {
    if (c.name == "projector_claim") {
      EXPECT_EQ(c.verdict, Verdict::kExpectedFail);
    } else {
      EXPECT_EQ(c.verdict, Verdict::kPass) << c.name << ": " << c.detail;
    }
  }
  EXPECT_FALSE(rep.illegal.rho_uv * rep.illegal.rho_uv == rep.illegal.rho_uv);
  EXPECT_FALSE(rep.eigen_right.left.empty());
  EXPECT_FALSE(rep.eigen_right.right.empty());
}

TEST_F(CopyPair, spectrum_of_uv) {
  int conj_pairs = 0, ones = 0;
  for (auto z : rep.eigen_uv.eigenvalues) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
    if (std::abs(z - 1.0) < 1e-10) ++ones;
    if (z.imag() > 1e-10 && std::abs(z - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-10) ++conj_pairs;
  }
  EXPECT_EQ(ones, 2);
  EXPECT_EQ(conj_pairs, 1);
}

TEST(split, parse) {
  const auto s = BitSplit::parse("0,1|2,3", 4);
  EXPECT_EQ(s.left, (std::set<std::size_t>{0, 1}));
  EXPECT_EQ(BitSplit::parse("2|2", 4).right, (std::set<std::size_t>{2, 3}));
  EXPECT_ANY_THROW(BitSplit::parse("0,1|1,2", 3));
  EXPECT_ANY_THROW(BitSplit::parse("0|1", 3));
}

TEST(appendix, reduced_left_annihilates_ghost) {
  const auto [t1, t2] = machine::build_appendix_machines();
  EXPECT_TRUE(tensor::is_orthogonal(t1.matrix));
  EXPECT_TRUE(tensor::is_orthogonal(t2.matrix));
  const auto rep = analyze_pair(t1, t2, BitSplit::halves(4));
  const auto ghost = tensor::basis_vector(BitString::parse("10")) - tensor::basis_vector(BitString::parse("11"));
  EXPECT_TRUE((rep.reduced_left * ghost).is_zero());
  EXPECT_EQ(tensor::trace(rep.reduced_left), tensor::trace(rep.illegal.rho_uv));
}

TEST(quantum, curve_matches_closed_form) {
  const auto curve = quantum_curve(25);
  ASSERT_EQ(curve.size(), 25u);
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const double th = static_cast<double>(k) * std::numbers::pi / 24;
    EXPECT_NEAR(curve[k].theta, th, 1e-15);
    EXPECT_NEAR(curve[k].p0, std::cos(th / 2) * std::cos(th / 2), 1e-12);
    EXPECT_NEAR(curve[k].p1, std::sin(th / 2) * std::sin(th / 2), 1e-12);
    EXPECT_NEAR(curve[k].correlation, std::cos(th), 1e-12);
    EXPECT_NEAR(curve[k].p0 + curve[k].p1, 1.0, 1e-12);
  }
  EXPECT_NEAR(curve[12].correlation, 0.0, 1e-12);
}

TEST(quantum, theta_is_canonicalised) {
  const auto a = quantum_reference({-std::numbers::pi / 3});
  const auto b = quantum_reference({std::numbers::pi / 3});
  EXPECT_NEAR(a.correlation, b.correlation, 1e-12);
  EXPECT_GE(a.theta, 0.0);
}
