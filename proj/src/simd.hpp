#pragma once

// Thin 128-bit vector layer. The SSE4.1 backend maps each function onto one
// intrinsic; the portable backend reproduces the same lane semantics with
// plain loops so the kernels can be tested on any host.

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>

#if defined(__SSE4_1__) && !defined(FASTUTF_PORTABLE)
#define FASTUTF_SSE41 1
#include <smmintrin.h>
#endif

namespace fastutf::simd {

#if FASTUTF_SSE41

inline constexpr const char* kBackend = "sse4.1";

using v128 = __m128i;

inline v128 load(const void* p) { return _mm_loadu_si128(static_cast<const __m128i*>(p)); }
inline void store(void* p, v128 v) { _mm_storeu_si128(static_cast<__m128i*>(p), v); }
inline void store_low64(void* p, v128 v) { _mm_storel_epi64(static_cast<__m128i*>(p), v); }

inline v128 zero() { return _mm_setzero_si128(); }
inline v128 splat8(std::uint8_t x) { return _mm_set1_epi8(static_cast<char>(x)); }
inline v128 splat16(std::uint16_t x) { return _mm_set1_epi16(static_cast<short>(x)); }
inline v128 splat32(std::uint32_t x) { return _mm_set1_epi32(static_cast<int>(x)); }

inline v128 bit_and(v128 a, v128 b) { return _mm_and_si128(a, b); }
inline v128 bit_or(v128 a, v128 b) { return _mm_or_si128(a, b); }
inline v128 bit_xor(v128 a, v128 b) { return _mm_xor_si128(a, b); }

// pshufb: out[i] = idx[i] & 0x80 ? 0 : table[idx[i] & 15]
inline v128 shuffle8(v128 table, v128 idx) { return _mm_shuffle_epi8(table, idx); }
inline unsigned movemask8(v128 v) { return static_cast<unsigned>(_mm_movemask_epi8(v)); }
inline bool all_zero(v128 v) { return _mm_testz_si128(v, v) != 0; }

template <int N> v128 srl16(v128 v) { return _mm_srli_epi16(v, N); }
template <int N> v128 sll16(v128 v) { return _mm_slli_epi16(v, N); }
template <int N> v128 srl32(v128 v) { return _mm_srli_epi32(v, N); }
template <int N> v128 sll32(v128 v) { return _mm_slli_epi32(v, N); }

inline v128 subs_u8(v128 a, v128 b) { return _mm_subs_epu8(a, b); }
inline v128 eq8(v128 a, v128 b) { return _mm_cmpeq_epi8(a, b); }
inline v128 eq16(v128 a, v128 b) { return _mm_cmpeq_epi16(a, b); }
inline v128 eq32(v128 a, v128 b) { return _mm_cmpeq_epi32(a, b); }

// Last N bytes of `before` followed by the first 16-N bytes of `cur`.
template <int N> v128 prev(v128 cur, v128 before) { return _mm_alignr_epi8(cur, before, 16 - N); }

inline v128 widen8_lo(v128 v) { return _mm_cvtepu8_epi16(v); }
inline v128 widen8_hi(v128 v) { return _mm_cvtepu8_epi16(_mm_srli_si128(v, 8)); }
inline v128 widen16_lo(v128 v) { return _mm_cvtepu16_epi32(v); }
inline v128 widen16_hi(v128 v) { return _mm_cvtepu16_epi32(_mm_srli_si128(v, 8)); }

inline v128 packus16(v128 a, v128 b) { return _mm_packus_epi16(a, b); }
inline v128 packs16(v128 a, v128 b) { return _mm_packs_epi16(a, b); }
inline v128 packus32(v128 a, v128 b) { return _mm_packus_epi32(a, b); }

// Per byte: mask MSB set selects b, else a.
inline v128 blend8(v128 a, v128 b, v128 mask) { return _mm_blendv_epi8(a, b, mask); }

inline std::array<std::uint32_t, 4> to_u32(v128 v) {
  std::array<std::uint32_t, 4> out;
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data()), v);
  return out;
}

#else

static_assert(std::endian::native == std::endian::little,
              "portable vector backend assumes little-endian lanes");

inline constexpr const char* kBackend = "portable";

struct v128 {
  std::array<std::uint8_t, 16> b;
};

namespace lanes {
template <class T>
std::array<T, 16 / sizeof(T)> get(const v128& v) {
  std::array<T, 16 / sizeof(T)> out;
  std::memcpy(out.data(), v.b.data(), 16);
  return out;
}
template <class T>
v128 put(const std::array<T, 16 / sizeof(T)>& a) {
  v128 v;
  std::memcpy(v.b.data(), a.data(), 16);
  return v;
}
template <class T, class F>
v128 map(v128 v, F f) {
  auto a = get<T>(v);
  for (auto& x : a) x = static_cast<T>(f(x));
  return put<T>(a);
}
template <class T, class F>
v128 zip(v128 x, v128 y, F f) {
  auto a = get<T>(x);
  const auto c = get<T>(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<T>(f(a[i], c[i]));
  return put<T>(a);
}
}  // namespace lanes

inline v128 load(const void* p) {
  v128 v;
  std::memcpy(v.b.data(), p, 16);
  return v;
}
inline void store(void* p, v128 v) { std::memcpy(p, v.b.data(), 16); }
inline void store_low64(void* p, v128 v) { std::memcpy(p, v.b.data(), 8); }

inline v128 zero() { return v128{}; }
inline v128 splat8(std::uint8_t x) {
  v128 v;
  v.b.fill(x);
  return v;
}
inline v128 splat16(std::uint16_t x) {
  std::array<std::uint16_t, 8> a;
  a.fill(x);
  return lanes::put<std::uint16_t>(a);
}
inline v128 splat32(std::uint32_t x) {
  std::array<std::uint32_t, 4> a;
  a.fill(x);
  return lanes::put<std::uint32_t>(a);
}

inline v128 bit_and(v128 a, v128 b) {
  return lanes::zip<std::uint8_t>(a, b, [](auto x, auto y) { return x & y; });
}
inline v128 bit_or(v128 a, v128 b) {
  return lanes::zip<std::uint8_t>(a, b, [](auto x, auto y) { return x | y; });
}
inline v128 bit_xor(v128 a, v128 b) {
  return lanes::zip<std::uint8_t>(a, b, [](auto x, auto y) { return x ^ y; });
}

inline v128 shuffle8(v128 table, v128 idx) {
  v128 out;
  for (int i = 0; i < 16; ++i) {
    out.b[i] = (idx.b[i] & 0x80) ? 0 : table.b[idx.b[i] & 15];
  }
  return out;
}
inline unsigned movemask8(v128 v) {
  unsigned m = 0;
  for (int i = 0; i < 16; ++i) m |= unsigned(v.b[i] >> 7) << i;
  return m;
}
inline bool all_zero(v128 v) {
  for (auto x : v.b) {
    if (x) return false;
  }
  return true;
}

template <int N> v128 srl16(v128 v) {
  return lanes::map<std::uint16_t>(v, [](unsigned x) { return x >> N; });
}
template <int N> v128 sll16(v128 v) {
  return lanes::map<std::uint16_t>(v, [](unsigned x) { return x << N; });
}
template <int N> v128 srl32(v128 v) {
  return lanes::map<std::uint32_t>(v, [](std::uint32_t x) { return x >> N; });
}
template <int N> v128 sll32(v128 v) {
  return lanes::map<std::uint32_t>(v, [](std::uint32_t x) { return x << N; });
}

inline v128 subs_u8(v128 a, v128 b) {
  return lanes::zip<std::uint8_t>(a, b, [](int x, int y) { return x > y ? x - y : 0; });
}
inline v128 eq8(v128 a, v128 b) {
  return lanes::zip<std::uint8_t>(a, b, [](auto x, auto y) { return x == y ? 0xFF : 0; });
}
inline v128 eq16(v128 a, v128 b) {
  return lanes::zip<std::uint16_t>(a, b, [](auto x, auto y) { return x == y ? 0xFFFF : 0; });
}
inline v128 eq32(v128 a, v128 b) {
  return lanes::zip<std::uint32_t>(a, b,
                                   [](auto x, auto y) { return x == y ? 0xFFFFFFFFu : 0u; });
}

template <int N> v128 prev(v128 cur, v128 before) {
  v128 out;
  for (int i = 0; i < 16; ++i) out.b[i] = i < N ? before.b[16 - N + i] : cur.b[i - N];
  return out;
}

inline v128 widen8_lo(v128 v) {
  std::array<std::uint16_t, 8> a;
  for (int i = 0; i < 8; ++i) a[i] = v.b[i];
  return lanes::put<std::uint16_t>(a);
}
inline v128 widen8_hi(v128 v) {
  std::array<std::uint16_t, 8> a;
  for (int i = 0; i < 8; ++i) a[i] = v.b[8 + i];
  return lanes::put<std::uint16_t>(a);
}
inline v128 widen16_lo(v128 v) {
  const auto w = lanes::get<std::uint16_t>(v);
  std::array<std::uint32_t, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = w[i];
  return lanes::put<std::uint32_t>(a);
}
inline v128 widen16_hi(v128 v) {
  const auto w = lanes::get<std::uint16_t>(v);
  std::array<std::uint32_t, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = w[4 + i];
  return lanes::put<std::uint32_t>(a);
}

inline v128 packus16(v128 a, v128 b) {
  const auto x = lanes::get<std::int16_t>(a);
  const auto y = lanes::get<std::int16_t>(b);
  auto sat = [](int v) { return std::uint8_t(v < 0 ? 0 : v > 255 ? 255 : v); };
  v128 out;
  for (int i = 0; i < 8; ++i) {
    out.b[i] = sat(x[i]);
    out.b[8 + i] = sat(y[i]);
  }
  return out;
}
inline v128 packs16(v128 a, v128 b) {
  const auto x = lanes::get<std::int16_t>(a);
  const auto y = lanes::get<std::int16_t>(b);
  auto sat = [](int v) { return std::uint8_t(std::int8_t(v < -128 ? -128 : v > 127 ? 127 : v)); };
  v128 out;
  for (int i = 0; i < 8; ++i) {
    out.b[i] = sat(x[i]);
    out.b[8 + i] = sat(y[i]);
  }
  return out;
}
inline v128 packus32(v128 a, v128 b) {
  const auto x = lanes::get<std::int32_t>(a);
  const auto y = lanes::get<std::int32_t>(b);
  auto sat = [](std::int64_t v) { return std::uint16_t(v < 0 ? 0 : v > 65535 ? 65535 : v); };
  std::array<std::uint16_t, 8> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = sat(x[i]);
    out[4 + i] = sat(y[i]);
  }
  return lanes::put<std::uint16_t>(out);
}

inline v128 blend8(v128 a, v128 b, v128 mask) {
  v128 out;
  for (int i = 0; i < 16; ++i) out.b[i] = (mask.b[i] & 0x80) ? b.b[i] : a.b[i];
  return out;
}

inline std::array<std::uint32_t, 4> to_u32(v128 v) { return lanes::get<std::uint32_t>(v); }

#endif

inline v128 load_table(const std::array<std::uint8_t, 16>& t) { return load(t.data()); }

}  // namespace fastutf::simd
