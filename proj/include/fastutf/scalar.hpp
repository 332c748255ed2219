#pragma once

// Branch-based reference codec. Every vectorized routine in the library is
// checked against these functions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "fastutf/types.hpp"

namespace fastutf {

struct DecodedChar {
  char32_t cp;
  std::uint8_t len;  // code units consumed

  friend constexpr bool operator==(const DecodedChar&,
                                   const DecodedChar&) = default;
};

/// Up to N code units holding one encoded character.
template <class Unit, std::size_t N>
struct EncodedChar {
  std::array<Unit, N> units{};
  std::uint8_t size = 0;

  const Unit* begin() const noexcept { return units.data(); }
  const Unit* end() const noexcept { return units.data() + size; }
  std::span<const Unit> view() const noexcept { return {begin(), size}; }
};

using Utf8Char = EncodedChar<std::uint8_t, 4>;
using Utf16Char = EncodedChar<char16_t, 2>;

/// Decodes the UTF-8 sequence starting at `pos` (< bytes.size()).
Expected<DecodedChar> decode_utf8_at(std::span<const std::uint8_t> bytes,
                                     std::size_t pos) noexcept;

/// Decodes the UTF-16 character starting at `pos` (< units.size()).
Expected<DecodedChar> decode_utf16_at(std::span<const char16_t> units,
                                      std::size_t pos) noexcept;

/// Minimal encodings. Surrogates and values above U+10FFFF are rejected with
/// Surrogate and TooLarge respectively.
Expected<Utf8Char> encode_utf8(char32_t cp) noexcept;
Expected<Utf16Char> encode_utf16(char32_t cp) noexcept;

/// Worst-case output sizes: one word per input byte, three bytes per input
/// word.
constexpr std::size_t utf16_capacity_for(std::size_t utf8_bytes) noexcept {
  return utf8_bytes;
}
constexpr std::size_t utf8_capacity_for(std::size_t utf16_words) noexcept {
  return 3 * utf16_words;
}

TranscodeResult validate_utf8_scalar(std::span<const std::uint8_t> bytes) noexcept;
TranscodeResult validate_utf16_scalar(std::span<const char16_t> units) noexcept;

/// Transcoders stop at the first error. `out` must hold at least the
/// worst-case size for the input (std::length_error otherwise); the engine
/// never grows it.
TranscodeResult transcode_utf8_to_utf16_scalar(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out);
TranscodeResult transcode_utf16_to_utf8_scalar(std::span<const char16_t> units,
                                               std::span<std::uint8_t> out);

}  // namespace fastutf
