#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace classent {

/// Ordered sequence of classical bits, leftmost bit first.
///
/// Used for register contents, logic tables and VM programs alike.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);
  /// Parses a string of '0'/'1' characters.
  static BitString parse(std::string_view text);
  /// The low `length` bits of `value`, most significant first.
  static BitString from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, std::uint8_t b);
  void flip(std::size_t i) { bits_[i] ^= 1u; }
  void push_back(std::uint8_t b);

  /// Big-endian integer value; requires size() <= 64.
  std::uint64_t value() const;
  BitString concat(const BitString& other) const;
  bool is_prefix_of(const BitString& other) const;

  std::string str() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  /// Canonical census order: shorter first, then lexicographic.
  friend bool operator<(const BitString& a, const BitString& b);

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace classent
