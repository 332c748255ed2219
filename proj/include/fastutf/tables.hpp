#pragma once

// Lookup tables driving the two transcoding kernels.
//
// UTF-8 -> UTF-16: a 12-bit end-of-character mask over the next 12 input
// bytes indexes the key table. Each key entry gives the number of bytes the
// window consumes and an index into the shuffle table. Shuffle entries are
// grouped by decode path:
//
//   [0, 64)     six characters of 1-2 bytes, one 16-bit lane each
//   [64, 145)   four characters of 1-3 bytes, one 32-bit lane each
//   [145, 209)  three characters of 1-4 bytes, one 32-bit lane each
//
// Inside a group, entries are ordered by their length tuple read as a
// mixed-radix number: character 0 is the most significant digit and the
// digit is length - 1.
//
// UTF-16 -> UTF-8: an 8-bit bitset (bit j set when word j is ASCII) indexes
// the pack table, which gives the number of output bytes and the pattern
// compacting the two candidate bytes per word.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fastutf {

enum class DecodePath : std::uint8_t {
  SixChars1to2 = 0,
  FourChars1to3 = 1,
  ThreeChars1to4 = 2,
};

inline constexpr std::size_t kKeyTableSize = 4096;
inline constexpr std::size_t kShuffleTableSize = 209;
inline constexpr std::size_t kPackTableSize = 256;

inline constexpr std::size_t kSixCharsBegin = 0;
inline constexpr std::size_t kFourCharsBegin = 64;
inline constexpr std::size_t kThreeCharsBegin = 145;

/// Shuffle index of keys that do not start with a decodable run of whole
/// characters; the kernel decodes such windows with the scalar codec.
inline constexpr std::uint8_t kNoShuffle = 0xFF;

/// Byte-permutation index selecting a zero byte.
inline constexpr std::uint8_t kZeroLane = 0x80;

struct KeyEntry {
  std::uint8_t consumed = 0;
  std::uint8_t shuffle_index = kNoShuffle;

  friend bool operator==(const KeyEntry&, const KeyEntry&) = default;
};

struct ShuffleEntry {
  DecodePath path;
  std::uint8_t char_count;               // 6, 4 or 3
  std::array<std::uint8_t, 6> lengths;   // bytes per character, unused tail zero
  alignas(16) std::array<std::uint8_t, 16> mask;

  std::uint8_t total_length() const noexcept;
};

struct PackEntry {
  std::uint8_t bytes_out;
  alignas(16) std::array<std::uint8_t, 16> mask;
};

/// Compaction pattern for four 32-bit lanes holding 1-3 byte UTF-8
/// candidates; keyed by two bits per lane (length - 1).
struct WidePackEntry {
  std::uint8_t bytes_out;
  alignas(16) std::array<std::uint8_t, 16> mask;
};

/// Bit i set iff byte i ends its character, i.e. byte i+1 is not a
/// continuation byte. `lookahead` is the byte after the window; at end of
/// input pass any non-continuation byte (e.g. 0).
std::uint16_t end_of_char_mask(std::span<const std::uint8_t, 12> window,
                               std::uint8_t lookahead) noexcept;

std::array<KeyEntry, kKeyTableSize> build_key_table();
std::array<ShuffleEntry, kShuffleTableSize> build_shuffle_table();
std::array<PackEntry, kPackTableSize> build_pack_table();
std::array<WidePackEntry, 256> build_wide_pack_table();

/// Built once on first use, immutable afterwards.
struct Tables {
  std::array<KeyEntry, kKeyTableSize> keys;
  std::array<ShuffleEntry, kShuffleTableSize> shuffles;
  std::array<PackEntry, kPackTableSize> packs;
  std::array<WidePackEntry, 256> wide_packs;
};

const Tables& tables();

/// Canonical little-endian dump of the key, shuffle and pack tables, in that
/// order:
///   key:     4096 x { u8 consumed, u8 shuffle_index }
///   shuffle:  209 x { u8 path, u8 char_count, u8 lengths[6], u8 mask[16] }
///   pack:     256 x { u8 bytes_out, u8 mask[16] }
std::vector<std::uint8_t> serialize_tables(const Tables& t);

/// Lower-case hex SHA-256 of serialize_tables(tables()).
std::string tables_digest();

}  // namespace fastutf
