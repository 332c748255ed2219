#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace fastutf {

/// Largest Unicode scalar value.
inline constexpr char32_t kMaxCodePoint = 0x10FFFF;

/// Why an input was rejected. Each kind corresponds to exactly one UTF-8
/// well-formedness rule; unpaired UTF-16 surrogates reuse `Surrogate`.
enum class ErrorKind : std::uint8_t {
  HeaderBits,  // the five most significant bits of a byte are all ones
  TooShort,    // a leading byte is missing continuation bytes
  TooLong,     // a continuation byte without a leading byte
  Overlong,    // the value fits in a shorter encoding
  TooLarge,    // the value exceeds U+10FFFF
  Surrogate,   // the value is in U+D800..U+DFFF, or a UTF-16 surrogate is unpaired
};

inline constexpr ErrorKind kAllErrorKinds[] = {
    ErrorKind::HeaderBits, ErrorKind::TooShort, ErrorKind::TooLong,
    ErrorKind::Overlong,   ErrorKind::TooLarge, ErrorKind::Surrogate,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// First offending sequence of a rejected input. `index` is a byte offset
/// for UTF-8 input and a word offset for UTF-16 input, and always points at
/// the first code unit of the sequence.
struct TranscodeError {
  ErrorKind kind;
  std::size_t index;

  friend bool operator==(const TranscodeError&, const TranscodeError&) = default;
};

/// Outcome of a validate or transcode call.
///
/// For transcoding, `units_written` is the number of output code units
/// produced; on error it counts the output for the valid prefix preceding
/// `error->index`. Validation never produces output and leaves it at zero.
struct TranscodeResult {
  std::size_t units_written = 0;
  std::optional<TranscodeError> error;

  bool ok() const noexcept { return !error.has_value(); }

  static TranscodeResult success(std::size_t written) noexcept {
    return {written, std::nullopt};
  }
  static TranscodeResult failure(ErrorKind kind, std::size_t index,
                                 std::size_t written = 0) noexcept {
    return {written, TranscodeError{kind, index}};
  }

  friend bool operator==(const TranscodeResult&,
                         const TranscodeResult&) = default;
};

/// Value-or-ErrorKind, used by the per-character primitives.
template <class T>
class Expected {
 public:
  constexpr Expected(T value) : storage_(value) {}
  constexpr Expected(ErrorKind kind) : storage_(kind) {}

  constexpr bool has_value() const noexcept { return storage_.index() == 0; }
  constexpr explicit operator bool() const noexcept { return has_value(); }
  constexpr const T& value() const { return std::get<0>(storage_); }
  constexpr const T& operator*() const { return value(); }
  constexpr const T* operator->() const { return &value(); }
  constexpr ErrorKind error() const { return std::get<1>(storage_); }

  friend constexpr bool operator==(const Expected&, const Expected&) = default;

 private:
  std::variant<T, ErrorKind> storage_;
};

enum class Utf16Class : std::uint8_t { Bmp, HighSurrogate, LowSurrogate };

/// Number of bytes in the UTF-8 sequence introduced by `lead`. A
/// continuation byte in lead position yields TooLong, 0xF8..0xFF HeaderBits.
constexpr Expected<int> utf8_sequence_length(std::uint8_t lead) noexcept {
  if (lead < 0x80) return 1;
  if (lead < 0xC0) return ErrorKind::TooLong;
  if (lead < 0xE0) return 2;
  if (lead < 0xF0) return 3;
  if (lead < 0xF8) return 4;
  return ErrorKind::HeaderBits;
}

constexpr bool is_continuation(std::uint8_t b) noexcept {
  return (b >> 6) == 0b10;
}

constexpr bool is_ascii(std::uint8_t b) noexcept { return b < 0x80; }

constexpr Utf16Class classify_utf16(char16_t unit) noexcept {
  if (unit >= 0xD800 && unit <= 0xDBFF) return Utf16Class::HighSurrogate;
  if (unit >= 0xDC00 && unit <= 0xDFFF) return Utf16Class::LowSurrogate;
  return Utf16Class::Bmp;
}

constexpr bool is_scalar_value(char32_t cp) noexcept {
  return cp <= kMaxCodePoint && (cp < 0xD800 || cp > 0xDFFF);
}

/// Minimal UTF-8 length of a scalar value.
constexpr int utf8_length(char32_t cp) noexcept {
  return cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
}

constexpr int utf16_length(char32_t cp) noexcept { return cp < 0x10000 ? 1 : 2; }

}  // namespace fastutf
