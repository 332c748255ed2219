#pragma once

// Per-character decode/encode primitives, inlined into the scalar codec and
// the vector kernels' cold paths.

#include <cstddef>
#include <cstdint>

#include "fastutf/scalar.hpp"
#include "fastutf/types.hpp"

namespace fastutf::detail {


inline Expected<DecodedChar> decode_utf8(const std::uint8_t* p,
                                         std::size_t avail) noexcept {
  const std::uint8_t lead = p[0];
  if (lead < 0x80) return DecodedChar{lead, 1};

  const Expected<int> length = utf8_sequence_length(lead);
  if (!length) return length.error();
  const int len = *length;

  for (int i = 1; i < len; ++i) {
    if (static_cast<std::size_t>(i) >= avail || !is_continuation(p[i])) {
      return ErrorKind::TooShort;
    }
  }

  char32_t cp;
  switch (len) {
    case 2:
      cp = (char32_t(lead & 0x1F) << 6) | (p[1] & 0x3F);
      if (cp < 0x80) return ErrorKind::Overlong;
      break;
    case 3:
      cp = (char32_t(lead & 0x0F) << 12) | (char32_t(p[1] & 0x3F) << 6) |
           (p[2] & 0x3F);
      if (cp < 0x800) return ErrorKind::Overlong;
      if (cp >= 0xD800 && cp <= 0xDFFF) return ErrorKind::Surrogate;
      break;
    default:
      cp = (char32_t(lead & 0x07) << 18) | (char32_t(p[1] & 0x3F) << 12) |
           (char32_t(p[2] & 0x3F) << 6) | (p[3] & 0x3F);
      if (cp < 0x10000) return ErrorKind::Overlong;
      if (cp > kMaxCodePoint) return ErrorKind::TooLarge;
      break;
  }
  return DecodedChar{cp, static_cast<std::uint8_t>(len)};
}

inline Expected<DecodedChar> decode_utf16(const char16_t* p,
                                          std::size_t avail) noexcept {
  const char16_t w = p[0];
  switch (classify_utf16(w)) {
    case Utf16Class::Bmp:
      return DecodedChar{w, 1};
    case Utf16Class::LowSurrogate:
      return ErrorKind::Surrogate;
    case Utf16Class::HighSurrogate:
      break;
  }
  if (avail < 2 || classify_utf16(p[1]) != Utf16Class::LowSurrogate) {
    return ErrorKind::Surrogate;
  }
  const char32_t cp =
      0x10000 + ((char32_t(w - 0xD800) << 10) | char32_t(p[1] - 0xDC00));
  return DecodedChar{cp, 2};
}

inline std::size_t put_utf8(char32_t cp, std::uint8_t* out) noexcept {
  if (cp < 0x80) {
    out[0] = static_cast<std::uint8_t>(cp);
    return 1;
  }
  if (cp < 0x800) {
    out[0] = static_cast<std::uint8_t>(0xC0 | (cp >> 6));
    out[1] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
    return 2;
  }
  if (cp < 0x10000) {
    out[0] = static_cast<std::uint8_t>(0xE0 | (cp >> 12));
    out[1] = static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F));
    out[2] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
    return 3;
  }
  out[0] = static_cast<std::uint8_t>(0xF0 | (cp >> 18));
  out[1] = static_cast<std::uint8_t>(0x80 | ((cp >> 12) & 0x3F));
  out[2] = static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F));
  out[3] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
  return 4;
}

inline std::size_t put_utf16(char32_t cp, char16_t* out) noexcept {
  if (cp < 0x10000) {
    out[0] = static_cast<char16_t>(cp);
    return 1;
  }
  const char32_t v = cp - 0x10000;
  out[0] = static_cast<char16_t>(0xD800 + (v >> 10));
  out[1] = static_cast<char16_t>(0xDC00 + (v & 0x3FF));
  return 2;
}

}  // namespace fastutf::detail
