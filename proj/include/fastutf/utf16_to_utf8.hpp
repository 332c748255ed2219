#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "fastutf/types.hpp"

namespace fastutf {

inline constexpr std::size_t kUtf16BlockWords = 8;

/// Range class of an 8-word block; each class subsumes the previous ones.
enum class BlockClass : std::uint8_t {
  AsciiOnly,      // all words <= 0x7F
  AtMostTwoByte,  // all words <= 0x7FF
  NoSurrogate,    // no word in 0xD800..0xDFFF
  HasSurrogate,
};

BlockClass classify_words(std::span<const char16_t, kUtf16BlockWords> words) noexcept;

/// Each pack routine requires the block to be in the stated class and
/// returns the number of UTF-8 bytes produced. The fixed-size output spans
/// are the bytes the routine may touch; only the returned prefix is
/// meaningful.

/// AsciiOnly: the low byte of each word.
std::size_t pack_ascii(std::span<const char16_t, kUtf16BlockWords> words,
                       std::span<std::uint8_t, 8> out) noexcept;

/// AsciiOnly or AtMostTwoByte: 8-16 bytes via the pack table.
std::size_t pack_two_byte(std::span<const char16_t, kUtf16BlockWords> words,
                          std::span<std::uint8_t, 16> out) noexcept;

/// Any class but HasSurrogate: 8-24 bytes, two four-word halves.
std::size_t pack_three_byte(std::span<const char16_t, kUtf16BlockWords> words,
                            std::span<std::uint8_t, 32> out) noexcept;

/// Validating UTF-16 (native order) to UTF-8 transcoder. Blocks holding a
/// surrogate, and the final partial block, take the scalar path. Result and
/// output are identical to transcode_utf16_to_utf8_scalar. `out` needs
/// 3 * units.size() bytes.
TranscodeResult transcode_utf16_to_utf8_vector(std::span<const char16_t> units,
                                               std::span<std::uint8_t> out);

}  // namespace fastutf
