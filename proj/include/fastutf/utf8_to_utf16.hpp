#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "fastutf/types.hpp"

namespace fastutf {

/// Bytes a window may read, and units it may write, from its start.
inline constexpr std::size_t kWindowBytes = 16;
inline constexpr std::size_t kWindowUnits = 16;

/// Input shorter than this at the end of a buffer goes to the scalar codec.
inline constexpr std::size_t kUtf8ScalarTail = 16;

struct WindowOutcome {
  std::uint8_t consumed;  // input bytes
  std::uint8_t written;   // UTF-16 units

  friend bool operator==(const WindowOutcome&, const WindowOutcome&) = default;
};

/// Converts the whole characters at the start of `window`, which must hold
/// validated UTF-8 beginning on a character boundary and at least
/// kWindowBytes bytes. Tries, in order: sixteen ASCII bytes, eight two-byte
/// characters, five three-byte characters, then the keyed 12-byte routine.
/// A byte past the end of `window` is treated as the end of input. `out`
/// must hold kWindowUnits units even when fewer are produced.
WindowOutcome convert_window(std::span<const std::uint8_t> window, std::span<char16_t> out);

/// Validating UTF-8 to UTF-16 transcoder over 64-byte blocks. Status,
/// error, units_written and output are identical to
/// transcode_utf8_to_utf16_scalar. `out` needs bytes.size() units.
TranscodeResult transcode_utf8_to_utf16_vector(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out);

}  // namespace fastutf
