#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "fastutf/types.hpp"

namespace fastutf {

inline constexpr std::size_t kBlockBytes = 64;

/// State carried between consecutive 64-byte validation blocks.
struct BlockState {
  /// Trailing bytes of the previous block that begin a sequence the block
  /// did not complete. Only the first `carried_len` entries are meaningful.
  std::array<std::uint8_t, 3> carried{};
  std::uint8_t carried_len = 0;
  /// Sticky: once set, stays set.
  bool error = false;

  std::span<const std::uint8_t> carried_bytes() const noexcept {
    return {carried.data(), carried_len};
  }

  friend bool operator==(const BlockState&, const BlockState&) = default;
};

bool is_ascii_block(std::span<const std::uint8_t, kBlockBytes> block) noexcept;

/// Checks carried bytes followed by `block` against every well-formedness
/// rule with nibble-indexed lookups. A sequence running past the end of the
/// block is left pending in the returned carry rather than flagged.
BlockState validate_block(const BlockState& state,
                          std::span<const std::uint8_t, kBlockBytes> block) noexcept;

/// Block-wise validation. The vector pass only accepts or rejects; on
/// rejection the failing region is re-scanned with the scalar validator, so
/// the result always equals validate_utf8_scalar(bytes).
TranscodeResult validate_utf8_vector(std::span<const std::uint8_t> bytes) noexcept;

}  // namespace fastutf
