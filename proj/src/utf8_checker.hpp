#pragma once

// Keiser-Lemire UTF-8 validation over 16-byte chunks. Every violation shows
// up as a pair of adjacent bytes (plus the 2/3-continuation requirement);
// three 16-entry nibble lookups classify each (previous byte, byte) pair and
// their AND is non-zero exactly for the invalid pairs.

#include <array>
#include <cstdint>

#include "simd.hpp"

namespace fastutf::detail {

namespace checker_bits {
// Bit assignments shared by the three lookups.
inline constexpr std::uint8_t kTooShort = 1 << 0;    // 11______ 0_______ / 11______ 11______
inline constexpr std::uint8_t kTooLong = 1 << 1;     // 0_______ 10______
inline constexpr std::uint8_t kOverlong3 = 1 << 2;   // 11100000 100_____
inline constexpr std::uint8_t kTooLarge = 1 << 3;    // 11110100 1001____ and above
inline constexpr std::uint8_t kSurrogate = 1 << 4;   // 11101101 101_____
inline constexpr std::uint8_t kOverlong2 = 1 << 5;   // 1100000_ 10______
inline constexpr std::uint8_t kTooLarge1000 = 1 << 6;  // 11110101 1000____ and above
inline constexpr std::uint8_t kOverlong4 = 1 << 6;   // 11110000 1000____
inline constexpr std::uint8_t kTwoConts = 1 << 7;    // 10______ 10______
inline constexpr std::uint8_t kCarry = kTooShort | kTooLong | kTwoConts;

// Indexed by the high nibble of the previous byte.
inline constexpr std::array<std::uint8_t, 16> kByte1High = {
    kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong, kTooLong,
    kTwoConts, kTwoConts, kTwoConts, kTwoConts,
    kTooShort | kOverlong2,
    kTooShort,
    kTooShort | kOverlong3 | kSurrogate,
    kTooShort | kTooLarge | kTooLarge1000 | kOverlong4,
};

// Indexed by the low nibble of the previous byte.
inline constexpr std::array<std::uint8_t, 16> kByte1Low = {
    kCarry | kOverlong3 | kOverlong2 | kOverlong4,
    kCarry | kOverlong2,
    kCarry,
    kCarry,
    kCarry | kTooLarge,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000 | kSurrogate,
    kCarry | kTooLarge | kTooLarge1000,
    kCarry | kTooLarge | kTooLarge1000,
};

// Indexed by the high nibble of the current byte.
inline constexpr std::array<std::uint8_t, 16> kByte2High = {
    kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort, kTooShort,
    kTooLong | kOverlong2 | kTwoConts | kOverlong3 | kTooLarge1000 | kOverlong4,
    kTooLong | kOverlong2 | kTwoConts | kOverlong3 | kTooLarge,
    kTooLong | kOverlong2 | kTwoConts | kSurrogate | kTooLarge,
    kTooLong | kOverlong2 | kTwoConts | kSurrogate | kTooLarge,
    kTooShort, kTooShort, kTooShort, kTooShort,
};
}  // namespace checker_bits

inline simd::v128 high_nibbles(simd::v128 v) {
  return simd::bit_and(simd::srl16<4>(v), simd::splat8(0x0F));
}

inline simd::v128 low_nibbles(simd::v128 v) {
  return simd::bit_and(v, simd::splat8(0x0F));
}

/// Accumulates violations over a stream of 16-byte chunks.
class Utf8Checker {
 public:
  /// `before` is the chunk preceding `input` in the stream (zeros at the
  /// start of a stream or at a known character boundary).
  void check(simd::v128 input, simd::v128 before) {
    using namespace simd;
    const v128 prev1 = prev<1>(input, before);
    const v128 special =
        bit_and(bit_and(shuffle8(load_table(checker_bits::kByte1High), high_nibbles(prev1)),
                        shuffle8(load_table(checker_bits::kByte1Low), low_nibbles(prev1))),
                shuffle8(load_table(checker_bits::kByte2High), high_nibbles(input)));

    // Third and fourth bytes of a sequence must be continuations; the
    // lookups above only flagged the two-continuations case, so XOR cancels
    // the expected ones and leaves the unexpected ones.
    const v128 prev2 = prev<2>(input, before);
    const v128 prev3 = prev<3>(input, before);
    const v128 is_third = subs_u8(prev2, splat8(0xE0 - 0x80));
    const v128 is_fourth = subs_u8(prev3, splat8(0xF0 - 0x80));
    const v128 must23 = bit_and(bit_or(is_third, is_fourth), splat8(0x80));
    error_ = bit_or(error_, bit_xor(must23, special));
  }

  void flag() { error_ = simd::splat8(0xFF); }
  bool has_error() const { return !simd::all_zero(error_); }

 private:
  simd::v128 error_ = simd::zero();
};

/// Number of trailing bytes (0-3) of a block that start a sequence the block
/// does not finish, judging by lead bytes alone.
inline unsigned incomplete_tail_length(const std::uint8_t* block_end) {
  if (block_end[-1] >= 0xC0) return 1;
  if (block_end[-2] >= 0xE0) return 2;
  if (block_end[-3] >= 0xF0) return 3;
  return 0;
}

}  // namespace fastutf::detail
