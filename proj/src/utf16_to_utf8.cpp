#include "fastutf/utf16_to_utf8.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

#include "codec_inline.hpp"
#include "fastutf/scalar.hpp"
#include "fastutf/tables.hpp"
#include "simd.hpp"

namespace fastutf {
namespace {

using simd::v128;

BlockClass classify(v128 v) {
  using namespace simd;
  if (all_zero(bit_and(v, splat16(0xFF80)))) return BlockClass::AsciiOnly;
  const v128 top5 = bit_and(v, splat16(0xF800));
  if (all_zero(top5)) return BlockClass::AtMostTwoByte;
  if (all_zero(eq16(top5, splat16(0xD800)))) return BlockClass::NoSurrogate;
  return BlockClass::HasSurrogate;
}

// Writes 8 bytes.
std::size_t pack_ascii_v(v128 v, std::uint8_t* out) {
  simd::store_low64(out, simd::packus16(v, v));
  return 8;
}

// Writes 16 bytes.
std::size_t pack_two_byte_v(v128 v, std::uint8_t* out, const Tables& t) {
  using namespace simd;
  const v128 is_ascii = eq16(bit_and(v, splat16(0xFF80)), zero());
  const unsigned key = movemask8(packs16(is_ascii, zero())) & 0xFF;
  // Per word: low byte 10bbbbbb, high byte 110aaaaa; ASCII words keep the
  // code point in the low byte.
  const v128 lead = bit_and(sll16<2>(v), splat16(0x1F00));
  const v128 cont = bit_and(v, splat16(0x3F));
  const v128 pair = bit_or(bit_or(lead, cont), splat16(0xC080));
  const v128 candidates = blend8(pair, v, is_ascii);
  const PackEntry& e = t.packs[key];
  store(out, shuffle8(candidates, load(e.mask.data())));
  return e.bytes_out;
}

// Four code points in 32-bit lanes -> lane bytes in output order, then
// compacted. Writes 16 bytes.
std::size_t pack_wide_half(v128 cp, unsigned key, std::uint8_t* out, const Tables& t) {
  using namespace simd;
  const v128 last = bit_or(bit_and(cp, splat32(0x3F)), splat32(0x80));
  const v128 middle = bit_or(bit_and(srl32<6>(cp), splat32(0x3F)), splat32(0x80));
  const v128 three = bit_or(bit_or(srl32<12>(cp), splat32(0xE0)),
                            bit_or(sll32<8>(middle), sll32<16>(last)));
  const v128 two = bit_or(bit_or(srl32<6>(cp), splat32(0xC0)), sll32<8>(last));
  const v128 is_one = eq32(bit_and(cp, splat32(0xFF80)), zero());
  const v128 is_two = eq32(bit_and(cp, splat32(0xF800)), zero());
  const v128 lanes = blend8(blend8(three, two, is_two), cp, is_one);
  const WidePackEntry& e = t.wide_packs[key];
  store(out, shuffle8(lanes, load(e.mask.data())));
  return e.bytes_out;
}

// Writes up to 28 bytes.
std::size_t pack_three_byte_v(v128 v, std::uint8_t* out, const Tables& t) {
  using namespace simd;
  const unsigned one = movemask8(eq16(bit_and(v, splat16(0xFF80)), zero())) & 0x5555;
  const unsigned two = movemask8(eq16(bit_and(v, splat16(0xF800)), zero())) & 0x5555;
  // Two bits per word holding length - 1; the fields cannot borrow.
  const unsigned codes = 0xAAAA - one - two;
  const std::size_t first = pack_wide_half(widen16_lo(v), codes & 0xFF, out, t);
  return first + pack_wide_half(widen16_hi(v), codes >> 8, out + first, t);
}

}  // namespace

BlockClass classify_words(std::span<const char16_t, kUtf16BlockWords> words) noexcept {
  return classify(simd::load(words.data()));
}

std::size_t pack_ascii(std::span<const char16_t, kUtf16BlockWords> words,
                       std::span<std::uint8_t, 8> out) noexcept {
  return pack_ascii_v(simd::load(words.data()), out.data());
}

std::size_t pack_two_byte(std::span<const char16_t, kUtf16BlockWords> words,
                          std::span<std::uint8_t, 16> out) noexcept {
  return pack_two_byte_v(simd::load(words.data()), out.data(), tables());
}

std::size_t pack_three_byte(std::span<const char16_t, kUtf16BlockWords> words,
                            std::span<std::uint8_t, 32> out) noexcept {
  return pack_three_byte_v(simd::load(words.data()), out.data(), tables());
}

TranscodeResult transcode_utf16_to_utf8_vector(std::span<const char16_t> units,
                                               std::span<std::uint8_t> out) {
  if (out.size() < utf8_capacity_for(units.size())) {
    throw std::length_error("utf16->utf8: output buffer below worst-case size");
  }
  const Tables& t = tables();
  const char16_t* p = units.data();
  const std::size_t n = units.size();
  std::uint8_t* o = out.data();
  std::uint8_t* const o_end = o + out.size();
  std::size_t pos = 0;

  // The pack routines store whole registers past their real output; the
  // last few blocks go through a scratch buffer when room runs short.
  constexpr std::ptrdiff_t kRoom = 32;
  std::array<std::uint8_t, kRoom> scratch;

  auto scalar_until = [&](std::size_t stop) -> std::optional<TranscodeResult> {
    while (pos < stop) {
      const auto c = detail::decode_utf16(p + pos, n - pos);
      if (!c) {
        return TranscodeResult::failure(c.error(), pos, static_cast<std::size_t>(o - out.data()));
      }
      o += detail::put_utf8(c->cp, o);
      pos += c->len;
    }
    return std::nullopt;
  };

  while (pos + kUtf16BlockWords <= n) {
    const v128 v = simd::load(p + pos);
    const BlockClass cls = classify(v);
    if (cls == BlockClass::HasSurrogate) {
      // A pair straddling the block end is consumed whole; pos may end up
      // one word past the block.
      if (auto err = scalar_until(pos + kUtf16BlockWords)) return *err;
      continue;
    }
    const bool roomy = o_end - o >= kRoom;
    std::uint8_t* dst = roomy ? o : scratch.data();
    std::size_t produced;
    switch (cls) {
      case BlockClass::AsciiOnly: produced = pack_ascii_v(v, dst); break;
      case BlockClass::AtMostTwoByte: produced = pack_two_byte_v(v, dst, t); break;
      default: produced = pack_three_byte_v(v, dst, t); break;
    }
    if (!roomy) std::memcpy(o, dst, produced);
    o += produced;
    pos += kUtf16BlockWords;
  }
  if (auto err = scalar_until(n)) return *err;
  return TranscodeResult::success(static_cast<std::size_t>(o - out.data()));
}

}  // namespace fastutf
