#pragma once

// Test-only switches for the vector kernels. Not installed, not part of the
// public API.

#include <cstdint>
#include <span>

#include "fastutf/types.hpp"
#include "fastutf/utf8_to_utf16.hpp"

namespace fastutf::detail {

struct Utf8ToUtf16Options {
  bool ascii_blocks = true;       // 64-byte all-ASCII shortcut
  bool window_fast_paths = true;  // 16-byte homogeneous shortcuts
};

TranscodeResult transcode_utf8_to_utf16_vector(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out,
                                               const Utf8ToUtf16Options& options);

WindowOutcome convert_window(std::span<const std::uint8_t> window, std::span<char16_t> out,
                             const Utf8ToUtf16Options& options);

}  // namespace fastutf::detail
