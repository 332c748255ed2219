#include "fastutf/scalar.hpp"

#include <stdexcept>

#include "codec_inline.hpp"

namespace fastutf {
namespace {

using detail::decode_utf16;
using detail::decode_utf8;
using detail::put_utf16;
using detail::put_utf8;

std::optional<ErrorKind> reject_scalar(char32_t cp) noexcept {
  if (cp > kMaxCodePoint) return ErrorKind::TooLarge;
  if (cp >= 0xD800 && cp <= 0xDFFF) return ErrorKind::Surrogate;
  return std::nullopt;
}

}  // namespace

Expected<DecodedChar> decode_utf8_at(std::span<const std::uint8_t> bytes,
                                     std::size_t pos) noexcept {
  return decode_utf8(bytes.data() + pos, bytes.size() - pos);
}

Expected<DecodedChar> decode_utf16_at(std::span<const char16_t> units,
                                      std::size_t pos) noexcept {
  return decode_utf16(units.data() + pos, units.size() - pos);
}

Expected<Utf8Char> encode_utf8(char32_t cp) noexcept {
  if (auto bad = reject_scalar(cp)) return *bad;
  Utf8Char c;
  c.size = static_cast<std::uint8_t>(put_utf8(cp, c.units.data()));
  return c;
}

Expected<Utf16Char> encode_utf16(char32_t cp) noexcept {
  if (auto bad = reject_scalar(cp)) return *bad;
  Utf16Char c;
  c.size = static_cast<std::uint8_t>(put_utf16(cp, c.units.data()));
  return c;
}

TranscodeResult validate_utf8_scalar(std::span<const std::uint8_t> bytes) noexcept {
  const std::uint8_t* p = bytes.data();
  const std::size_t n = bytes.size();
  std::size_t pos = 0;
  while (pos < n) {
    if (p[pos] < 0x80) {
      ++pos;
      continue;
    }
    const auto c = decode_utf8(p + pos, n - pos);
    if (!c) return TranscodeResult::failure(c.error(), pos);
    pos += c->len;
  }
  return TranscodeResult::success(0);
}

TranscodeResult validate_utf16_scalar(std::span<const char16_t> units) noexcept {
  const char16_t* p = units.data();
  const std::size_t n = units.size();
  std::size_t pos = 0;
  while (pos < n) {
    const auto c = decode_utf16(p + pos, n - pos);
    if (!c) return TranscodeResult::failure(c.error(), pos);
    pos += c->len;
  }
  return TranscodeResult::success(0);
}

TranscodeResult transcode_utf8_to_utf16_scalar(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out) {
  if (out.size() < utf16_capacity_for(bytes.size())) {
    throw std::length_error("utf8->utf16: output buffer below worst-case size");
  }
  const std::uint8_t* p = bytes.data();
  const std::size_t n = bytes.size();
  char16_t* o = out.data();
  std::size_t pos = 0;
  std::size_t written = 0;
  while (pos < n) {
    if (p[pos] < 0x80) {
      o[written++] = p[pos++];
      continue;
    }
    const auto c = decode_utf8(p + pos, n - pos);
    if (!c) return TranscodeResult::failure(c.error(), pos, written);
    written += put_utf16(c->cp, o + written);
    pos += c->len;
  }
  return TranscodeResult::success(written);
}

TranscodeResult transcode_utf16_to_utf8_scalar(std::span<const char16_t> units,
                                               std::span<std::uint8_t> out) {
  if (out.size() < utf8_capacity_for(units.size())) {
    throw std::length_error("utf16->utf8: output buffer below worst-case size");
  }
  const char16_t* p = units.data();
  const std::size_t n = units.size();
  std::uint8_t* o = out.data();
  std::size_t pos = 0;
  std::size_t written = 0;
  while (pos < n) {
    const auto c = decode_utf16(p + pos, n - pos);
    if (!c) return TranscodeResult::failure(c.error(), pos, written);
    written += put_utf8(c->cp, o + written);
    pos += c->len;
  }
  return TranscodeResult::success(written);
}

}  // namespace fastutf
