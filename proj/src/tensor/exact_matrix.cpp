#include "classent/exact_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace classent::tensor {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Dyadic> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match dimensions");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Dyadic(1);
  return m;
}

ExactMatrix ExactMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, int exponent) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Dyadic> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data.emplace_back(v, exponent);
  }
  return ExactMatrix(r, c, std::move(data));
}

std::size_t ExactMatrix::register_bits() const {
  if (rows_ == 0 || !std::has_single_bit(rows_)) {
    throw std::invalid_argument("matrix dimension " + std::to_string(rows_) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(rows_));
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Dyadic& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matrix_product(a, b); }

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_symmetric() const { return square() && *this == transpose(*this); }

std::size_t basis_index(const BitString& bits) {
  if (bits.empty()) throw std::invalid_argument("basis state needs at least one bit");
  const std::size_t n = bits.size();
  if (n >= 63) throw std::invalid_argument("register too wide");
  return ((std::size_t{1} << n) - 1) - bits.value();
}

BitString basis_state(std::size_t index, std::size_t register_bits) {
  const std::size_t dim = std::size_t{1} << register_bits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  return BitString::from_value(dim - 1 - index, register_bits);
}

ExactMatrix basis_vector(const BitString& bits) {
  const std::size_t idx = basis_index(bits);
  ExactMatrix v(std::size_t{1} << bits.size(), 1);
  v(idx, 0) = Dyadic(1);
  return v;
}

ExactMatrix projector(const BitString& bits) {
  const ExactMatrix v = basis_vector(bits);
  return v * transpose(v);
}

ExactMatrix pauli_x() { return ExactMatrix::from_ints({{0, 1}, {1, 0}}); }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Dyadic& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
      }
    }
  }
  return out;
}

ExactMatrix matrix_product(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
  }
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Dyadic& s = a(i, k);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += s * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Dyadic trace(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace of a non-square matrix");
  Dyadic t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Dyadic determinant(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Dyadic(1);

  // Scale to an integer matrix, then fraction-free (Bareiss) elimination.
  std::int32_t scale = 0;
  for (const auto& x : a.entries()) scale = std::max(scale, x.exponent());
  std::vector<__int128> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Dyadic& x = a.entries()[i];
    m[i] = static_cast<__int128>(x.numerator()) << (scale - x.exponent());
  }
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return m[r * n + c]; };

  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Dyadic(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 lhs = 0;
        __int128 rhs = 0;
        __int128 diff = 0;
        if (__builtin_mul_overflow(at(i, j), at(k, k), &lhs) || __builtin_mul_overflow(at(i, k), at(k, j), &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &diff)) {
          throw std::overflow_error("determinant overflow");
        }
        at(i, j) = diff / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  __int128 det = at(n - 1, n - 1) * sign;
  if (det > INT64_MAX || det < -INT64_MAX) throw std::overflow_error("determinant overflow");
  // det(A) = det(scaled) / 2^(scale * n)
  const std::int64_t total = static_cast<std::int64_t>(scale) * static_cast<std::int64_t>(n);
  if (total > INT32_MAX) throw std::overflow_error("determinant exponent overflow");
  return Dyadic(static_cast<std::int64_t>(det), static_cast<std::int32_t>(total));
}

ExactMatrix partial_trace(const ExactMatrix& m, const std::set<std::size_t>& keep_bits) {
  if (!m.square()) throw std::invalid_argument("partial trace of a non-square matrix");
  const std::size_t n = m.register_bits();
  if (keep_bits.empty() || keep_bits.size() >= n) {
    throw std::invalid_argument("partial trace needs a non-empty proper subset of the " + std::to_string(n) +
                                " register bits");
  }
  for (auto b : keep_bits) {
    if (b >= n) throw std::invalid_argument("bit position " + std::to_string(b) + " outside register");
  }
  std::vector<std::size_t> keep(keep_bits.begin(), keep_bits.end());
  std::vector<std::size_t> traced;
  for (std::size_t b = 0; b < n; ++b) {
    if (!keep_bits.contains(b)) traced.push_back(b);
  }
  // Index bit of position p is bit (n - 1 - p) of the row index; the
  // complement in basis_index is uniform so it commutes with the split.
  auto scatter = [n](const std::vector<std::size_t>& positions, std::size_t packed) {
    std::size_t idx = 0;
    const std::size_t k = positions.size();
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = (packed >> (k - 1 - j)) & 1u;
      idx |= bit << (n - 1 - positions[j]);
    }
    return idx;
  };

  const std::size_t kd = std::size_t{1} << keep.size();
  const std::size_t td = std::size_t{1} << traced.size();
  ExactMatrix out(kd, kd);
  for (std::size_t a = 0; a < kd; ++a) {
    const std::size_t ra = scatter(keep, a);
    for (std::size_t b = 0; b < kd; ++b) {
      const std::size_t cb = scatter(keep, b);
      Dyadic sum;
      for (std::size_t t = 0; t < td; ++t) {
        const std::size_t off = scatter(traced, t);
        sum += m(ra | off, cb | off);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

bool is_permutation_matrix(const ExactMatrix& m) {
  if (!m.square()) return false;
  const Dyadic one(1);
  std::vector<int> col_count(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Dyadic& x = m(i, j);
      if (x.is_zero()) continue;
      if (x != one) return false;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1) return false;
  }
  for (int c : col_count) {
    if (c != 1) return false;
  }
  return true;
}

bool is_orthogonal(const ExactMatrix& m) {
  return m.square() && m * transpose(m) == ExactMatrix::identity(m.rows());
}

}  // namespace classent::tensor
