#include "classent/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace classent {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::from_value(std::uint64_t value, std::size_t length) {
  if (length > 64) throw std::invalid_argument("bit string longer than 64 bits");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[length - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1u);
  }
  return BitString(std::move(bits));
}

void BitString::set(std::size_t i, std::uint8_t b) {
  if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
  bits_.at(i) = b;
}

void BitString::push_back(std::uint8_t b) {
  if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
  bits_.push_back(b);
}

std::uint64_t BitString::value() const {
  if (bits_.size() > 64) throw std::invalid_argument("bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

BitString BitString::concat(const BitString& other) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  BitString r;
  r.bits_ = std::move(bits);
  return r;
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

bool operator<(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits_ < b.bits_;
}

}  // namespace classent
