#include "fastutf/tables.hpp"

#include <bit>
#include <numeric>

#include "fastutf/digest.hpp"
#include "fastutf/types.hpp"

namespace fastutf {
namespace {

struct PathShape {
  DecodePath path;
  std::uint8_t char_count;
  std::uint8_t max_length;
  std::size_t begin;
  int lane_bytes;
};

constexpr std::array<PathShape, 3> kShapes = {{
    {DecodePath::SixChars1to2, 6, 2, kSixCharsBegin, 2},
    {DecodePath::FourChars1to3, 4, 3, kFourCharsBegin, 4},
    {DecodePath::ThreeChars1to4, 3, 4, kThreeCharsBegin, 4},
}};

std::size_t tuple_index(const PathShape& shape, const std::uint8_t* lengths) {
  std::size_t index = 0;
  for (int j = 0; j < shape.char_count; ++j) index = index * shape.max_length + (lengths[j] - 1);
  return shape.begin + index;
}

ShuffleEntry make_shuffle_entry(const PathShape& shape, std::size_t local) {
  ShuffleEntry e{};
  e.path = shape.path;
  e.char_count = shape.char_count;
  for (int j = shape.char_count - 1; j >= 0; --j) {
    e.lengths[j] = static_cast<std::uint8_t>(local % shape.max_length + 1);
    local /= shape.max_length;
  }
  e.mask.fill(kZeroLane);
  // Character j lands in lane j with its last byte in the least significant
  // position, preceding bytes above it.
  int start = 0;
  for (int j = 0; j < shape.char_count; ++j) {
    const int len = e.lengths[j];
    for (int k = 0; k < len; ++k) {
      e.mask[j * shape.lane_bytes + k] = static_cast<std::uint8_t>(start + len - 1 - k);
    }
    start += len;
  }
  return e;
}

}  // namespace

std::uint8_t ShuffleEntry::total_length() const noexcept {
  return static_cast<std::uint8_t>(std::accumulate(lengths.begin(), lengths.end(), 0));
}

std::uint16_t end_of_char_mask(std::span<const std::uint8_t, 12> window,
                               std::uint8_t lookahead) noexcept {
  std::uint16_t mask = 0;
  for (int i = 0; i < 12; ++i) {
    const std::uint8_t next = i + 1 < 12 ? window[i + 1] : lookahead;
    if (!is_continuation(next)) mask |= std::uint16_t(1u << i);
  }
  return mask;
}

std::array<KeyEntry, kKeyTableSize> build_key_table() {
  std::array<KeyEntry, kKeyTableSize> table{};
  for (unsigned key = 0; key < kKeyTableSize; ++key) {
    std::array<std::uint8_t, 12> lengths{};
    int count = 0;
    int last_end = -1;
    for (int i = 0; i < 12; ++i) {
      if (key & (1u << i)) {
        lengths[count++] = static_cast<std::uint8_t>(i - last_end);
        last_end = i;
      }
    }
    KeyEntry best;
    // Shapes are listed in preference order, so only a strictly larger
    // consumption displaces an earlier one.
    for (const PathShape& shape : kShapes) {
      if (count < shape.char_count) continue;
      int consumed = 0;
      bool fits = true;
      for (int j = 0; j < shape.char_count; ++j) {
        fits &= lengths[j] <= shape.max_length;
        consumed += lengths[j];
      }
      if (fits && consumed > best.consumed) {
        best.consumed = static_cast<std::uint8_t>(consumed);
        best.shuffle_index = static_cast<std::uint8_t>(tuple_index(shape, lengths.data()));
      }
    }
    table[key] = best;
  }
  return table;
}

std::array<ShuffleEntry, kShuffleTableSize> build_shuffle_table() {
  std::array<ShuffleEntry, kShuffleTableSize> table{};
  for (std::size_t s = 0; s < kShapes.size(); ++s) {
    const PathShape& shape = kShapes[s];
    const std::size_t end = s + 1 < kShapes.size() ? kShapes[s + 1].begin : kShuffleTableSize;
    for (std::size_t i = shape.begin; i < end; ++i) {
      table[i] = make_shuffle_entry(shape, i - shape.begin);
    }
  }
  return table;
}

std::array<PackEntry, kPackTableSize> build_pack_table() {
  std::array<PackEntry, kPackTableSize> table{};
  for (unsigned key = 0; key < kPackTableSize; ++key) {
    PackEntry& e = table[key];
    e.mask.fill(kZeroLane);
    // Word j occupies candidate bytes 2j (low) and 2j+1 (high). ASCII words
    // keep their low byte; others emit the lead (high) then continuation.
    int out = 0;
    for (int j = 0; j < 8; ++j) {
      if (key & (1u << j)) {
        e.mask[out++] = static_cast<std::uint8_t>(2 * j);
      } else {
        e.mask[out++] = static_cast<std::uint8_t>(2 * j + 1);
        e.mask[out++] = static_cast<std::uint8_t>(2 * j);
      }
    }
    e.bytes_out = static_cast<std::uint8_t>(out);
  }
  return table;
}

std::array<WidePackEntry, 256> build_wide_pack_table() {
  std::array<WidePackEntry, 256> table{};
  for (unsigned key = 0; key < 256; ++key) {
    WidePackEntry& e = table[key];
    e.mask.fill(kZeroLane);
    int out = 0;
    for (int j = 0; j < 4; ++j) {
      const int len = ((key >> (2 * j)) & 3) + 1;
      if (len == 4) {
        out = 0;
        e.mask.fill(kZeroLane);
        break;
      }
      for (int k = 0; k < len; ++k) e.mask[out++] = static_cast<std::uint8_t>(4 * j + k);
    }
    e.bytes_out = static_cast<std::uint8_t>(out);
  }
  return table;
}

const Tables& tables() {
  static const Tables instance{build_key_table(), build_shuffle_table(), build_pack_table(),
                               build_wide_pack_table()};
  return instance;
}

std::vector<std::uint8_t> serialize_tables(const Tables& t) {
  std::vector<std::uint8_t> out;
  out.reserve(kKeyTableSize * 2 + kShuffleTableSize * 24 + kPackTableSize * 17);
  for (const KeyEntry& k : t.keys) {
    out.push_back(k.consumed);
    out.push_back(k.shuffle_index);
  }
  for (const ShuffleEntry& s : t.shuffles) {
    out.push_back(static_cast<std::uint8_t>(s.path));
    out.push_back(s.char_count);
    out.insert(out.end(), s.lengths.begin(), s.lengths.end());
    out.insert(out.end(), s.mask.begin(), s.mask.end());
  }
  for (const PackEntry& p : t.packs) {
    out.push_back(p.bytes_out);
    out.insert(out.end(), p.mask.begin(), p.mask.end());
  }
  return out;
}

std::string tables_digest() { return sha256_hex(serialize_tables(tables())); }

}  // namespace fastutf
