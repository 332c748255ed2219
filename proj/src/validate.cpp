#include "fastutf/validate.hpp"

#include <algorithm>
#include <cstring>

#include "fastutf/scalar.hpp"
#include "simd.hpp"
#include "utf8_checker.hpp"

namespace fastutf {
namespace {

using simd::v128;

simd::v128 carried_chunk(const BlockState& state) {
  std::array<std::uint8_t, 16> bytes{};
  std::copy_n(state.carried.begin(), state.carried_len,
              bytes.end() - state.carried_len);
  return simd::load(bytes.data());
}

bool ascii_block(const std::uint8_t* p) {
  const v128 any = simd::bit_or(simd::bit_or(simd::load(p), simd::load(p + 16)),
                                simd::bit_or(simd::load(p + 32), simd::load(p + 48)));
  return simd::movemask8(any) == 0;
}

BlockState check_block(const BlockState& state, const std::uint8_t* p) {
  BlockState next;
  next.error = state.error;
  if (ascii_block(p)) {
    // A pending sequence cannot be completed by ASCII.
    next.error |= state.carried_len != 0;
    return next;
  }
  detail::Utf8Checker checker;
  v128 before = carried_chunk(state);
  for (int i = 0; i < 4; ++i) {
    const v128 chunk = simd::load(p + 16 * i);
    checker.check(chunk, before);
    before = chunk;
  }
  next.error |= checker.has_error();
  next.carried_len = static_cast<std::uint8_t>(detail::incomplete_tail_length(p + kBlockBytes));
  std::copy_n(p + kBlockBytes - next.carried_len, next.carried_len, next.carried.begin());
  return next;
}

TranscodeResult rescan_from(std::span<const std::uint8_t> bytes, std::size_t start) {
  TranscodeResult r = validate_utf8_scalar(bytes.subspan(start));
  if (r.error) r.error->index += start;
  return r;
}

}  // namespace

bool is_ascii_block(std::span<const std::uint8_t, kBlockBytes> block) noexcept {
  return ascii_block(block.data());
}

BlockState validate_block(const BlockState& state,
                          std::span<const std::uint8_t, kBlockBytes> block) noexcept {
  return check_block(state, block.data());
}

TranscodeResult validate_utf8_vector(std::span<const std::uint8_t> bytes) noexcept {
  const std::uint8_t* p = bytes.data();
  const std::size_t n = bytes.size();
  BlockState state;
  std::size_t pos = 0;

  // Everything before `pos - state.carried_len` is known to be complete,
  // valid characters, so a scalar re-scan can start there.
  for (; pos + kBlockBytes <= n; pos += kBlockBytes) {
    const std::size_t resume = pos - state.carried_len;
    state = check_block(state, p + pos);
    if (state.error) return rescan_from(bytes, resume);
  }
  if (pos < n) {
    std::array<std::uint8_t, kBlockBytes> scratch{};
    std::memcpy(scratch.data(), p + pos, n - pos);
    const std::size_t resume = pos - state.carried_len;
    state = check_block(state, scratch.data());
    // Zero padding is ASCII, so a sequence cut by the end of input has
    // already been flagged; nothing can remain pending.
    if (state.error) return rescan_from(bytes, resume);
    pos = n;
  }
  if (state.carried_len != 0) return rescan_from(bytes, n - state.carried_len);
  return TranscodeResult::success(0);
}

}  // namespace fastutf
