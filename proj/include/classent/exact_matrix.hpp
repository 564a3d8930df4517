#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "classent/bitstring.hpp"
#include "classent/dyadic.hpp"

namespace classent::tensor {

/// Dense matrix of exact dyadic entries, stored row-major.
///
/// Register operators are 2^n x 2^n. The basis of an n-bit register is
/// ordered |1...1> first and |0...0> last, i.e. the row of basis state s is
/// 2^n - 1 - value(s). This follows from |0> = (0,1)^T, |1> = (1,0)^T and
/// the usual Kronecker ordering.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Dyadic> entries);

  static ExactMatrix identity(std::size_t dim);
  /// Integer matrix times 2^-exponent, e.g. from_ints({{0,0},{1,1}}, 2).
  static ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows, int exponent = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  /// log2(rows); throws if rows is not a power of two.
  std::size_t register_bits() const;

  const Dyadic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Dyadic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Dyadic>& entries() const { return data_; }

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Dyadic& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Dyadic& s) { return a *= s; }
  friend ExactMatrix operator*(const Dyadic& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  bool is_zero() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Dyadic> data_;
};

/// Row index of a basis state in the fixed ordering.
std::size_t basis_index(const BitString& bits);
/// Inverse of basis_index for a register of `register_bits` bits.
BitString basis_state(std::size_t index, std::size_t register_bits);

ExactMatrix basis_vector(const BitString& bits);
ExactMatrix projector(const BitString& bits);
ExactMatrix pauli_x();

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matrix_product(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& a);
Dyadic trace(const ExactMatrix& a);
Dyadic determinant(const ExactMatrix& a);

/// Trace over every register bit not in `keep_bits`. Bit position 0 is the
/// leftmost bit; kept bits keep their relative order.
ExactMatrix partial_trace(const ExactMatrix& m, const std::set<std::size_t>& keep_bits);

bool is_permutation_matrix(const ExactMatrix& m);
bool is_orthogonal(const ExactMatrix& m);

// Text format: one row per line, entries "num/2^k" or integers separated by
// single spaces.
std::string to_text(const ExactMatrix& m);
ExactMatrix parse_text(std::string_view text);

}  // namespace classent::tensor
