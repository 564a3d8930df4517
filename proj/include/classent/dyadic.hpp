#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace classent::tensor {

/// Exact number of the form numerator / 2^exponent.
///
/// Values are kept canonical: the numerator is odd, or the value is zero
/// with exponent 0. Arithmetic never rounds; results that do not fit the
/// 64-bit numerator throw std::overflow_error.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, std::int32_t exponent = 0);

  static Dyadic pow2(std::int32_t k);  // 2^k, k may be negative

  std::int64_t numerator() const { return num_; }
  std::int32_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ <= 0; }
  double to_double() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "num/2^k" for non-integers, plain integer otherwise.
  std::string str() const;
  /// Accepts "n", "-n", "n/2^k" and "n/d" with d a power of two.
  static Dyadic parse(std::string_view text);

 private:
  void normalize();

  std::int64_t num_ = 0;
  std::int32_t exp_ = 0;
};

}  // namespace classent::tensor
