#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "classent/dyadic.hpp"
#include "classent/exact_matrix.hpp"

namespace classent::tensor {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Eigenvalues below this magnitude are treated as zero.
inline constexpr double kZeroEigenvalueTolerance = 1e-9;
/// Bound on ||Mv - lambda v||_inf for every reported pair (v max-normalized).
inline constexpr double kEigenResidualTolerance = 1e-9;

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenPair {
  Complex value;
  /// Set when the eigenvalue was confirmed exactly (a dyadic root).
  std::optional<Dyadic> exact_value;
  /// Scaled so the largest-magnitude component is exactly +1 (lowest index on ties).
  ComplexVector vector;
  /// Zero eigenvalue with two or more nonzero components.
  bool ghost = false;
};

struct EigenReport {
  /// With algebraic multiplicity.
  std::vector<Complex> eigenvalues;
  std::vector<EigenPair> right;
  std::vector<EigenPair> left;
  bool exact_path = false;

  std::vector<bool> zero_subspace_flags() const;
  bool has_ghost() const;
};

/// Coefficients c_0..c_n of det(x I - M), c_n = 1. Exact.
std::vector<Dyadic> characteristic_polynomial(const ExactMatrix& m);

/// Dimension <= 4 goes through the exact characteristic polynomial with
/// dyadic roots split off exactly; larger matrices use an iterative QR solver.
/// Eigenvectors of degenerate eigenvalues span the eigenspace; defective
/// eigenvalues get fewer vectors than their multiplicity.
EigenReport eigen_decompose(const ExactMatrix& m, bool with_left = false);

/// Scales v so the largest-magnitude component is +1.
void normalize_max_component(ComplexVector& v);

}  // namespace classent::tensor
