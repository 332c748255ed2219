#include "fastutf/utf8_to_utf16.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>

#include "codec_inline.hpp"
#include "fastutf/scalar.hpp"
#include "fastutf/tables.hpp"
#include "fastutf/validate.hpp"
#include "kernel_options.hpp"
#include "simd.hpp"
#include "utf8_checker.hpp"

namespace fastutf {
namespace {

using simd::v128;

// Windows start no later than this offset within a block, so the keyed
// routine's 12 mask bits always lie inside the validated 64 bytes.
constexpr std::size_t kLastWindowStart = kBlockBytes - 12;

constexpr std::array<std::uint8_t, 16> kSwapPairs = {1, 0, 3, 2, 5, 4, 7, 6,
                                                     9, 8, 11, 10, 13, 12, 15, 14};
// Five three-byte characters: (middle, last) pairs and lead bytes per lane.
constexpr std::array<std::uint8_t, 16> kThreeByteLow = {
    2, 1, 5, 4, 8, 7, 11, 10, 14, 13, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80};
constexpr std::array<std::uint8_t, 16> kThreeByteLead = {
    0, 0x80, 3, 0x80, 6, 0x80, 9, 0x80, 12, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80};

void store_zero_extended(const v128 bytes, char16_t* out) {
  simd::store(out, simd::widen8_lo(bytes));
  simd::store(out + 8, simd::widen8_hi(bytes));
}

// Returns consumed == 0 when the key has no table entry.
WindowOutcome convert_masked(const std::uint8_t* in, std::uint64_t end_mask, char16_t* out,
                             const Tables& t, bool fast_paths) {
  using namespace simd;
  const v128 input = load(in);

  if (fast_paths) {
    const unsigned m16 = static_cast<unsigned>(end_mask & 0xFFFF);
    if (m16 == 0xFFFF) {
      store_zero_extended(input, out);
      return {16, 16};
    }
    if (m16 == 0xAAAA) {
      const v128 v = shuffle8(input, load_table(kSwapPairs));
      const v128 cp = bit_or(bit_and(v, splat16(0x7F)), srl16<2>(bit_and(v, splat16(0x1F00))));
      store(out, cp);
      return {16, 8};
    }
    if ((m16 & 0x7FFF) == 0x4924) {
      const v128 low = shuffle8(input, load_table(kThreeByteLow));
      const v128 lead = shuffle8(input, load_table(kThreeByteLead));
      const v128 cp = bit_or(bit_or(sll16<12>(lead), srl16<2>(bit_and(low, splat16(0x3F00)))),
                             bit_and(low, splat16(0x3F)));
      store(out, cp);
      return {15, 5};
    }
  }

  const KeyEntry key = t.keys[end_mask & 0xFFF];
  if (key.consumed == 0) return {0, 0};
  const ShuffleEntry& entry = t.shuffles[key.shuffle_index];
  const v128 perm = shuffle8(input, load(entry.mask.data()));

  switch (entry.path) {
    case DecodePath::SixChars1to2: {
      const v128 cp =
          bit_or(bit_and(perm, splat16(0x7F)), srl16<2>(bit_and(perm, splat16(0x1F00))));
      store(out, cp);
      return {key.consumed, 6};
    }
    case DecodePath::FourChars1to3: {
      const v128 ascii = bit_and(perm, splat32(0x7F));
      const v128 middle = srl32<2>(bit_and(perm, splat32(0x3F00)));
      const v128 high = srl32<4>(bit_and(perm, splat32(0x0F0000)));
      const v128 cp = bit_or(bit_or(ascii, middle), high);
      store_low64(out, packus32(cp, cp));
      return {key.consumed, 4};
    }
    case DecodePath::ThreeChars1to4: {
      const v128 ascii = bit_and(perm, splat32(0x7F));
      const v128 middle = srl32<2>(bit_and(perm, splat32(0x3F00)));
      // Byte 2 is a continuation for four-byte characters and the lead of
      // three-byte ones; bit 6 tells them apart and clears the lead's
      // extra header bit.
      const v128 third_raw = bit_and(perm, splat32(0x3F0000));
      const v128 third_fix = srl32<1>(bit_and(perm, splat32(0x400000)));
      const v128 third = srl32<4>(bit_xor(third_raw, third_fix));
      const v128 fourth = srl32<6>(bit_and(perm, splat32(0x07000000)));
      const auto cps = to_u32(bit_or(bit_or(ascii, middle), bit_or(third, fourth)));
      std::size_t written = 0;
      for (int j = 0; j < 3; ++j) written += detail::put_utf16(cps[j], out + written);
      return {key.consumed, static_cast<std::uint8_t>(written)};
    }
  }
  return {0, 0};
}

// Bit i set iff byte i of the 64-byte block is a continuation byte.
std::uint64_t continuation_mask(const std::uint8_t* block) {
  using namespace simd;
  std::uint64_t mask = 0;
  for (int i = 0; i < 4; ++i) {
    const v128 chunk = load(block + 16 * i);
    const v128 cont = eq8(bit_and(chunk, splat8(0xC0)), splat8(0x80));
    mask |= std::uint64_t(movemask8(cont)) << (16 * i);
  }
  return mask;
}

bool block_is_valid(const std::uint8_t* block) {
  // Blocks always start on a character boundary, so no carried state.
  detail::Utf8Checker checker;
  v128 before = simd::zero();
  for (int i = 0; i < 4; ++i) {
    const v128 chunk = simd::load(block + 16 * i);
    checker.check(chunk, before);
    before = chunk;
  }
  return !checker.has_error();
}

bool block_is_ascii(const std::uint8_t* p) {
  using namespace simd;
  const v128 any = bit_or(bit_or(load(p), load(p + 16)), bit_or(load(p + 32), load(p + 48)));
  return movemask8(any) == 0;
}

TranscodeResult scalar_from(std::span<const std::uint8_t> bytes, std::size_t pos,
                            std::span<char16_t> out, std::size_t written) {
  TranscodeResult r = transcode_utf8_to_utf16_scalar(bytes.subspan(pos), out.subspan(written));
  r.units_written += written;
  if (r.error) r.error->index += pos;
  return r;
}

WindowOutcome scalar_window(const std::uint8_t* in, std::size_t avail, char16_t* out) {
  const auto c = detail::decode_utf8(in, avail);
  if (!c) return {0, 0};
  return {c->len, static_cast<std::uint8_t>(detail::put_utf16(c->cp, out))};
}

}  // namespace

namespace detail {

WindowOutcome convert_window(std::span<const std::uint8_t> window, std::span<char16_t> out,
                             const Utf8ToUtf16Options& options) {
  if (window.size() < kWindowBytes || out.size() < kWindowUnits) {
    throw std::length_error("convert_window: window or output too small");
  }
  std::uint64_t end_mask = 0;
  for (std::size_t i = 0; i < kWindowBytes; ++i) {
    if (i + 1 >= window.size() || !is_continuation(window[i + 1])) end_mask |= 1ull << i;
  }
  WindowOutcome w = convert_masked(window.data(), end_mask, out.data(), tables(),
                                   options.window_fast_paths);
  if (w.consumed == 0) w = scalar_window(window.data(), window.size(), out.data());
  return w;
}

TranscodeResult transcode_utf8_to_utf16_vector(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out,
                                               const Utf8ToUtf16Options& options) {
  if (out.size() < utf16_capacity_for(bytes.size())) {
    throw std::length_error("utf8->utf16: output buffer below worst-case size");
  }
  const Tables& t = tables();
  const std::uint8_t* p = bytes.data();
  const std::size_t n = bytes.size();
  char16_t* o = out.data();
  std::size_t pos = 0;
  std::size_t written = 0;

  // Windows read up to kWindowBytes past their start, which can reach 16
  // bytes beyond the block. Near the end of input the block is copied into
  // a zero-padded scratch buffer; zeros are ASCII and never consumed.
  alignas(16) std::array<std::uint8_t, kBlockBytes + kWindowBytes> scratch;

  while (n - pos > kUtf8ScalarTail) {
    if (options.ascii_blocks) {
      while (n - pos >= kBlockBytes && block_is_ascii(p + pos)) {
        for (std::size_t i = 0; i < kBlockBytes; i += 16) {
          store_zero_extended(simd::load(p + pos + i), o + written + i);
        }
        pos += kBlockBytes;
        written += kBlockBytes;
      }
      if (n - pos <= kUtf8ScalarTail) break;
    }

    const std::size_t avail = n - pos;
    const std::uint8_t* block = p + pos;
    if (avail < scratch.size()) {
      std::memcpy(scratch.data(), block, avail);
      std::memset(scratch.data() + avail, 0, scratch.size() - avail);
      block = scratch.data();
    }

    if (!block_is_valid(block)) return scalar_from(bytes, pos, out, written);

    // Bit 63 stays clear: whether byte 63 ends a character is unknown, so
    // nothing reaching it is consumed in this block.
    const std::uint64_t end_mask = ~continuation_mask(block) >> 1;
    const std::size_t limit = std::min(kLastWindowStart, avail - kWindowBytes);
    std::size_t local = 0;
    while (local < limit) {
      WindowOutcome w = convert_masked(block + local, end_mask >> local, o + written, t,
                                       options.window_fast_paths);
      if (w.consumed == 0) {
        w = scalar_window(block + local, avail - local, o + written);
        if (w.consumed == 0) return scalar_from(bytes, pos + local, out, written);
      }
      local += w.consumed;
      written += w.written;
    }
    pos += local;
  }

  if (pos == n) return TranscodeResult::success(written);
  return scalar_from(bytes, pos, out, written);
}

}  // namespace detail

WindowOutcome convert_window(std::span<const std::uint8_t> window, std::span<char16_t> out) {
  return detail::convert_window(window, out, {});
}

TranscodeResult transcode_utf8_to_utf16_vector(std::span<const std::uint8_t> bytes,
                                               std::span<char16_t> out) {
  return detail::transcode_utf8_to_utf16_vector(bytes, out, {});
}

}  // namespace fastutf
