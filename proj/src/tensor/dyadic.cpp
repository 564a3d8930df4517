#include "classent/dyadic.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace classent::tensor {

namespace {

std::int64_t checked_shift(std::int64_t v, std::int32_t k) {
  if (v == 0 || k == 0) return v;
  if (k >= 63) throw std::overflow_error("dyadic numerator overflow");
  const std::int64_t limit = INT64_MAX >> k;
  if (v > limit || v < -limit) throw std::overflow_error("dyadic numerator overflow");
  return v * (std::int64_t{1} << k);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, std::int32_t exponent) : num_(numerator), exp_(exponent) {
  normalize();
}

Dyadic Dyadic::pow2(std::int32_t k) {
  if (k >= 0) return Dyadic(checked_shift(1, k), 0);
  return Dyadic(1, -k);
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  // Strip factors of two from the numerator while the exponent allows.
  const int tz = std::countr_zero(static_cast<std::uint64_t>(num_));
  if (exp_ > 0) {
    const int drop = std::min<std::int32_t>(tz, exp_);
    num_ >>= drop;
    exp_ -= drop;
  }
  if (exp_ < 0) {
    num_ = checked_shift(num_, -exp_);
    exp_ = 0;
  }
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

Dyadic Dyadic::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("dyadic numerator overflow");
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.num_ == 0) return *this;
  if (num_ == 0) return *this = o;
  const std::int32_t e = std::max(exp_, o.exp_);
  const std::int64_t a = checked_shift(num_, e - exp_);
  const std::int64_t b = checked_shift(o.num_, e - o.exp_);
  std::int64_t s = 0;
  if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("dyadic numerator overflow");
  num_ = s;
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  std::int64_t p = 0;
  if (__builtin_mul_overflow(num_, o.num_, &p)) throw std::overflow_error("dyadic numerator overflow");
  num_ = p;
  exp_ += o.exp_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const Dyadic d = a - b;
  return d.num_ <=> 0;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(text), 0);
  const std::int64_t num = parse_int(text.substr(0, slash));
  std::string_view den = text.substr(slash + 1);
  if (den.starts_with("2^")) {
    const std::int64_t k = parse_int(den.substr(2));
    if (k < 0 || k > 4096) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    return Dyadic(num, static_cast<std::int32_t>(k));
  }
  const std::int64_t d = parse_int(den);
  if (d <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(d))) {
    throw std::invalid_argument("denominator is not a power of two in '" + std::string(text) + "'");
  }
  return Dyadic(num, std::countr_zero(static_cast<std::uint64_t>(d)));
}

}  // namespace classent::tensor
