#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ergolab {

// Fixed-length bit vector packed into 64-bit words. Bits past size() in the
// last word are kept zero so that word-level comparisons and popcounts work.
class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices);
  // Hex digits are read in order; digit k holds bits 4k..4k+3, least significant bit first.
  static BitVector from_hex(std::string_view hex, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  void reset() noexcept;

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  std::size_t find_first() const noexcept;
  std::size_t find_next(std::size_t i) const noexcept;
  std::vector<std::size_t> indices() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  bool operator==(const BitVector& other) const = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  std::string to_hex() const;

 private:
  void check_same_size(const BitVector& other) const;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace ergolab
