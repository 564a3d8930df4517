#include "classent/eigen.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace classent::tensor {

namespace {

constexpr int kMaxRootIterations = 2000;
constexpr std::size_t kExactPathMaxDim = 4;

using Poly = std::vector<Dyadic>;  // ascending coefficients

std::optional<Dyadic> evaluate_exact(const Poly& p, const Dyadic& x) {
  try {
    Dyadic acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

Poly deflate(const Poly& p, const Dyadic& root) {
  // p(x) = (x - root) q(x), exact when root is a root.
  const std::size_t d = p.size() - 1;
  Poly q(d);
  Dyadic carry;
  for (std::size_t k = d; k-- > 0;) {
    carry = p[k + 1] + carry * root;
    q[k] = carry;
  }
  return q;
}

Complex eval(const std::vector<Complex>& p, Complex x) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& p) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<double>(k));
  return d;
}

/// Roots of a monic polynomial by Weierstrass (Durand-Kerner) iteration.
std::vector<Complex> polynomial_roots(const Poly& exact) {
  std::vector<Complex> p;
  for (const auto& c : exact) p.emplace_back(c.to_double(), 0.0);
  const std::size_t d = p.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-p[0]};
  if (d == 2) {
    const Complex disc = std::sqrt(p[1] * p[1] - 4.0 * p[0]);
    return {(-p[1] + disc) / 2.0, (-p[1] - disc) / 2.0};
  }

  double bound = 0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(p[k]));
  bound = 1 + bound;
  std::vector<Complex> z(d);
  const Complex seed(0.4, 0.9);
  for (std::size_t k = 0; k < d; ++k) z[k] = std::pow(seed, static_cast<double>(k)) * (bound / 2);

  int iter = 0;
  for (; iter < kMaxRootIterations; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      if (std::abs(denom) == 0) denom = Complex(1e-300, 0);
      const Complex step = eval(p, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * bound) break;
  }
  // Multiple roots converge slowly; Durand-Kerner still lands within ~1e-8,
  // which is enough for the exact snapping below.
  if (iter == kMaxRootIterations) {
    for (const auto& r : z) {
      if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
        throw NumericFailure("polynomial root iteration diverged");
      }
    }
  }
  return z;
}

void polish_roots(const Poly& exact, std::vector<Complex>& roots) {
  std::vector<Complex> p;
  for (const auto& c : exact) p.emplace_back(c.to_double(), 0.0);
  const auto dp = derivative(p);
  for (auto& r : roots) {
    for (int i = 0; i < 50; ++i) {
      const Complex d = eval(dp, r);
      if (std::abs(d) < 1e-300) break;
      const Complex step = eval(p, r) / d;
      r -= step;
      if (std::abs(step) < 1e-17) break;
    }
    if (std::abs(r.imag()) < 1e-14) r = Complex(r.real(), 0.0);
  }
}

struct Root {
  Complex value;
  std::optional<Dyadic> exact;
};

/// Splits dyadic roots off exactly, the rest numerically.
std::vector<Root> eigenvalues_exact_path(const ExactMatrix& m) {
  Poly p = characteristic_polynomial(m);
  std::int32_t scale = 0;
  for (const auto& x : m.entries()) scale = std::max(scale, x.exponent());

  std::vector<Root> out;
  bool found = true;
  while (found && p.size() > 1) {
    found = false;
    for (const auto& r : polynomial_roots(p)) {
      // Repeated roots can sit ~1e-4 off the axis; the exact check below
      // is what decides, so this filter only needs to be loose.
      if (std::abs(r.imag()) > 1e-2) continue;
      // A rational eigenvalue of a dyadic matrix is k / 2^scale for an integer k.
      const double k = std::round(std::ldexp(r.real(), scale));
      if (std::abs(k) > 9e15) continue;
      const Dyadic candidate(static_cast<std::int64_t>(k), scale);
      const auto v = evaluate_exact(p, candidate);
      if (v && v->is_zero()) {
        out.push_back({Complex(candidate.to_double(), 0.0), candidate});
        p = deflate(p, candidate);
        found = true;
        break;
      }
    }
  }
  if (p.size() > 1) {
    auto rest = polynomial_roots(p);
    polish_roots(p, rest);
    for (const auto& r : rest) out.push_back({r, std::nullopt});
  }
  return out;
}

std::vector<Root> eigenvalues_numeric_path(const ExactMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).to_double();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw NumericFailure("QR eigenvalue iteration did not converge for " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
  }
  std::int32_t scale = 0;
  for (const auto& x : m.entries()) scale = std::max(scale, x.exponent());

  std::vector<Root> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex v = solver.eigenvalues()[i];
    std::optional<Dyadic> exact;
    if (std::abs(v.imag()) < 1e-7) {
      const double k = std::round(std::ldexp(v.real(), scale));
      if (std::abs(std::ldexp(k, -scale) - v.real()) < 1e-7) {
        const Dyadic candidate(static_cast<std::int64_t>(k), scale);
        try {
          if (determinant(m - candidate * ExactMatrix::identity(m.rows())).is_zero()) exact = candidate;
        } catch (const std::overflow_error&) {
        }
      }
    }
    if (exact) v = Complex(exact->to_double(), 0.0);
    out.push_back({v, exact});
  }
  return out;
}

/// Basis of the null space of the n x n matrix `a` (row-major).
std::vector<ComplexVector> null_space(std::vector<Complex> a, std::size_t n, double tol) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[best * n + col])) best = r;
    }
    if (std::abs(a[best * n + col]) <= tol) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(a[row * n + c], a[best * n + c]);
    const Complex piv = a[row * n + col];
    for (std::size_t c = 0; c < n; ++c) a[row * n + c] /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      const Complex f = a[r * n + col];
      if (f == Complex(0)) continue;
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] -= f * a[row * n + c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<ComplexVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    ComplexVector v(n, 0.0);
    v[free] = 1.0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r * n + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

double residual(const ExactMatrix& m, const ComplexVector& v, Complex lambda) {
  double worst = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j).to_double() * v[j];
    worst = std::max(worst, std::abs(acc - lambda * v[i]));
  }
  return worst;
}

std::vector<EigenPair> eigenvectors(const ExactMatrix& m, const std::vector<Root>& roots) {
  const std::size_t n = m.rows();
  double norm = 0;
  for (const auto& x : m.entries()) norm = std::max(norm, std::abs(x.to_double()));
  const double tol = 1e-9 * std::max(1.0, norm * static_cast<double>(n));

  // One null-space computation per distinct eigenvalue.
  std::vector<Root> distinct;
  for (const auto& r : roots) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Root& d) {
      if (d.exact && r.exact) return *d.exact == *r.exact;
      return std::abs(d.value - r.value) < 1e-7;
    });
    if (!seen) distinct.push_back(r);
  }

  std::vector<EigenPair> pairs;
  for (const auto& r : distinct) {
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).to_double();
      a[i * n + i] -= r.value;
    }
    auto basis = null_space(std::move(a), n, tol);
    if (basis.empty()) {
      std::ostringstream msg;
      msg << "no eigenvector found for eigenvalue " << r.value;
      throw NumericFailure(msg.str());
    }
    for (auto& v : basis) {
      normalize_max_component(v);
      const double res = residual(m, v, r.value);
      if (!(res < kEigenResidualTolerance)) {
        std::ostringstream msg;
        msg << "eigenpair residual " << res << " exceeds " << kEigenResidualTolerance << " for eigenvalue "
            << r.value;
        throw NumericFailure(msg.str());
      }
      EigenPair pair;
      pair.value = r.value;
      pair.exact_value = r.exact;
      pair.vector = std::move(v);
      if (std::abs(r.value) < kZeroEigenvalueTolerance) {
        const auto nonzero = std::count_if(pair.vector.begin(), pair.vector.end(),
                                           [](Complex c) { return std::abs(c) > kZeroEigenvalueTolerance; });
        pair.ghost = nonzero >= 2;
      }
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

}  // namespace

std::vector<bool> EigenReport::zero_subspace_flags() const {
  std::vector<bool> flags;
  for (const auto& p : right) flags.push_back(p.ghost);
  return flags;
}

bool EigenReport::has_ghost() const {
  auto g = [](const EigenPair& p) { return p.ghost; };
  return std::any_of(right.begin(), right.end(), g) || std::any_of(left.begin(), left.end(), g);
}

std::vector<Dyadic> characteristic_polynomial(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 16) throw std::invalid_argument("characteristic polynomial limited to 16x16");
  // det(xI - M) = sum_k (-1)^k e_k x^(n-k), e_k = sum of k x k principal minors.
  std::vector<Dyadic> e(n + 1);
  e[0] = Dyadic(1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) idx.push_back(i);
    }
    ExactMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    }
    e[idx.size()] += determinant(sub);
  }
  std::vector<Dyadic> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : -e[k];
  return coeffs;
}

void normalize_max_component(ComplexVector& v) {
  std::size_t best = 0;
  double best_mag = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best_mag * (1 + 1e-12) + 1e-300) {
      best = i;
      best_mag = mag;
    }
  }
  if (best_mag <= 0) return;
  const Complex s = v[best];
  for (auto& c : v) {
    c /= s;
    if (std::abs(c.imag()) < 1e-15) c = Complex(c.real(), 0.0);
    if (std::abs(c) < 1e-15) c = 0.0;
  }
  v[best] = 1.0;
}

EigenReport eigen_decompose(const ExactMatrix& m, bool with_left) {
  if (!m.square()) throw std::invalid_argument("eigen-decomposition of a non-square matrix");
  if (m.rows() == 0) return {};
  EigenReport report;
  report.exact_path = m.rows() <= kExactPathMaxDim;
  const auto roots = report.exact_path ? eigenvalues_exact_path(m) : eigenvalues_numeric_path(m);
  for (const auto& r : roots) report.eigenvalues.push_back(r.value);
  report.right = eigenvectors(m, roots);
  if (with_left) report.left = eigenvectors(transpose(m), roots);
  return report;
}

}  // namespace classent::tensor
