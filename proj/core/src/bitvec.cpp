#include "ergolab/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace ergolab {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVector::BitVector(std::size_t size) : words_(word_count(size), 0), size_(size) {}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (std::size_t i : indices) v.set(i);
  return v;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() != (size + 3) / 4) {
    throw std::invalid_argument("hex bitstring length " + std::to_string(hex.size()) +
                                " does not match " + std::to_string(size) + " bits");
  }
  BitVector v(size);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const int nibble = hex_value(hex[k]);
    if (nibble < 0) throw std::invalid_argument("invalid hex digit in bitstring");
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const std::size_t i = 4 * k + b;
      if (i >= size) throw std::invalid_argument("hex bitstring sets bits past its length");
      v.set(i);
    }
  }
  return v;
}

bool BitVector::test(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  return (*this)[i];
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

void BitVector::reset() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::any() const noexcept {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::find_first() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return 64 * k + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return npos;
}

std::size_t BitVector::find_next(std::size_t i) const noexcept {
  ++i;
  if (i >= size_) return npos;
  std::size_t k = i >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return 64 * k + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size()) return npos;
    w = words_[k];
  }
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
  return out;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (other.size_ != size_) {
    throw std::invalid_argument("bit vectors of different lengths (" + std::to_string(size_) +
                                " vs " + std::to_string(other.size_) + ")");
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((size_ + 3) / 4, '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t bit = 4 * k;
    const unsigned nibble = static_cast<unsigned>((words_[bit >> 6] >> (bit & 63)) & 0xF);
    out[k] = kDigits[nibble];
  }
  return out;
}

}  // namespace ergolab
