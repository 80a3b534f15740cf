#pragma once

// Word-level helpers for bit-packed rows. Column j (1-based) is bit j-1.

#include <bit>
#include <cstdint>
#include <span>

namespace atomshuttle::detail {

inline constexpr int kWordBits = 64;

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const std::uint64_t> words, int col) {
  const int b = col - 1;
  return (words[b / kWordBits] >> (b % kWordBits)) & 1U;
}

inline void set_bit(std::span<std::uint64_t> words, int col) {
  const int b = col - 1;
  words[b / kWordBits] |= std::uint64_t{1} << (b % kWordBits);
}

inline void clear_bit(std::span<std::uint64_t> words, int col) {
  const int b = col - 1;
  words[b / kWordBits] &= ~(std::uint64_t{1} << (b % kWordBits));
}

inline int popcount(std::span<const std::uint64_t> words) {
  int total = 0;
  for (auto w : words) total += std::popcount(w);
  return total;
}

inline bool any(std::span<const std::uint64_t> words) {
  for (auto w : words)
    if (w) return true;
  return false;
}

/// Calls f(col) for every set bit, in increasing column order.
template <class F>
void for_each_set_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::uint64_t w = words[k];
    while (w) {
      const int b = std::countr_zero(w);
      f(static_cast<int>(k) * kWordBits + b + 1);
      w &= w - 1;
    }
  }
}

/// Column of the lowest set bit, or 0 if none.
inline int first_set(std::span<const std::uint64_t> words) {
  for (std::size_t k = 0; k < words.size(); ++k)
    if (words[k]) return static_cast<int>(k) * kWordBits + std::countr_zero(words[k]) + 1;
  return 0;
}

/// out = in moved one column toward column 1 (bit 0 falls off).
inline void shift_toward_low(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  const std::size_t m = in.size();
  for (std::size_t k = 0; k < m; ++k) {
    std::uint64_t w = in[k] >> 1;
    if (k + 1 < m) w |= in[k + 1] << 63;
    out[k] = w;
  }
}

/// out = in moved one column toward column n (the top bit of the last word
/// is dropped; callers check the boundary first).
inline void shift_toward_high(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  const std::size_t m = in.size();
  for (std::size_t k = m; k-- > 0;) {
    std::uint64_t w = in[k] << 1;
    if (k > 0) w |= in[k - 1] >> 63;
    out[k] = w;
  }
}

}  // namespace atomshuttle::detail
