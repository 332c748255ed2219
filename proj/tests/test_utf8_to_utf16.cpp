#include <gtest/gtest.h>

#include <vector>

#include "fastutf/corpus.hpp"
#include "fastutf/scalar.hpp"
#include "fastutf/utf8_to_utf16.hpp"
#include "kernel_options.hpp"
#include "test_support.hpp"

using namespace fastutf;
using namespace fastutf::testing;

namespace {

using Bytes = std::vector<std::uint8_t>;
using Words = std::vector<char16_t>;

Bytes repeat(std::initializer_list<std::uint8_t> unit, int times) {
  Bytes out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), unit);
  return out;
}

struct Converted {
  TranscodeResult result;
  Words words;
};

Converted scalar(const Bytes& in) {
  Words out(in.size());
  const auto r = transcode_utf8_to_utf16_scalar(in, out);
  out.resize(r.units_written);
  return {r, out};
}

Converted vector(const Bytes& in, const detail::Utf8ToUtf16Options& options = {}) {
  Words out(in.size());
  const auto r = detail::transcode_utf8_to_utf16_vector(in, out, options);
  out.resize(r.units_written);
  return {r, out};
}

void expect_same(const Bytes& in, const detail::Utf8ToUtf16Options& options = {}) {
  const auto a = scalar(in);
  const auto b = vector(in, options);
  ASSERT_EQ(b.result, a.result);
  ASSERT_EQ(b.words, a.words);
}

Bytes inject_at_boundary(Rng& rng, Bytes corpus) {
  std::vector<std::size_t> boundaries;
  for (std::size_t i = 0; i <= corpus.size(); ++i) {
    if (i == corpus.size() || !is_continuation(corpus[i])) boundaries.push_back(i);
  }
  const std::size_t at = boundaries[below(rng, boundaries.size())];
  const auto bad = violation(rng, kAllErrorKinds[below(rng, 6)]);
  corpus.insert(corpus.begin() + at, bad.begin(), bad.end());
  return corpus;
}

}  // namespace

TEST(Utf8ToUtf16Window, AsciiFastPath) {
  const std::string s = "abcdefghijklmnop";
  const Bytes in(s.begin(), s.end());
  Words out(16);
  EXPECT_EQ(convert_window(in, out), (WindowOutcome{16, 16}));
  for (int i = 0; i < 16; ++i) EXPECT_EQ(out[i], 0x61 + i);
}

TEST(Utf8ToUtf16Window, FourThreeByteCharacters) {
  Bytes in = repeat({0xE4, 0xBD, 0xA0}, 4);
  in.resize(20, ' ');
  Words out(16);
  const auto w = convert_window(in, out);
  EXPECT_EQ(w, (WindowOutcome{12, 4}));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(out[i], 0x4F60);
}

TEST(Utf8ToUtf16Window, FiveThreeByteCharactersTakeFastPath) {
  Bytes in = repeat({0xE4, 0xBD, 0xA0}, 6);
  Words out(16);
  const auto w = convert_window(in, out);
  EXPECT_EQ(w, (WindowOutcome{15, 5}));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(out[i], 0x4F60);
  // The keyed routine alone handles four of them.
  EXPECT_EQ(detail::convert_window(in, out, {true, false}), (WindowOutcome{12, 4}));
}

TEST(Utf8ToUtf16Window, SurrogatePairsFromFourByteCharacters) {
  const Bytes in = repeat({0xF0, 0x9F, 0x98, 0x80}, 4);
  Words out(16);
  const auto w = convert_window(in, out);
  EXPECT_EQ(w, (WindowOutcome{12, 6}));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(out[2 * i], 0xD83D);
    EXPECT_EQ(out[2 * i + 1], 0xDE00);
  }
}

TEST(Utf8ToUtf16Window, EightTwoByteCharacters) {
  const Bytes in = repeat({0xD7, 0x90}, 8);
  Words out(16);
  EXPECT_EQ(convert_window(in, out), (WindowOutcome{16, 8}));
  for (int i = 0; i < 8; ++i) EXPECT_EQ(out[i], 0x5D0);
}

TEST(Utf8ToUtf16Window, ProgressAndAgreementOnValidWindows) {
  Rng rng(29);
  for (int trial = 0; trial < 50000; ++trial) {
    Bytes in = random_valid_utf8(rng, 16 + below(rng, 8));
    Words out(16);
    for (const bool fast : {true, false}) {
      const auto w = detail::convert_window(in, out, {true, fast});
      ASSERT_GE(w.consumed, 1);
      ASSERT_LE(w.written, w.consumed);
      const Bytes head(in.begin(), in.begin() + w.consumed);
      const auto expected = scalar(head);
      ASSERT_TRUE(expected.result.ok());
      ASSERT_EQ(Words(out.begin(), out.begin() + w.written), expected.words);
    }
  }
}

TEST(Utf8ToUtf16Vector, Examples) {
  EXPECT_EQ(vector({}).result, TranscodeResult::success(0));

  Bytes in(1000, 'a');
  in.insert(in.end(), {0xED, 0xA0, 0x80});
  in.resize(1100, 'b');
  const auto r = vector(in).result;
  EXPECT_EQ(r, TranscodeResult::failure(ErrorKind::Surrogate, 1000, 1000));
}

TEST(Utf8ToUtf16Vector, AsciiIsZeroExtended) {
  Rng rng(31);
  for (std::size_t len = 0; len < 300; ++len) {
    Bytes in(len);
    for (auto& b : in) b = static_cast<std::uint8_t>(below(rng, 0x80));
    const auto out = vector(in);
    ASSERT_TRUE(out.result.ok());
    ASSERT_EQ(out.words.size(), len);
    for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(out.words[i], in[i]);
  }
}

TEST(Utf8ToUtf16Vector, ShortInputsOfEveryLength) {
  Rng rng(37);
  for (std::size_t len = 0; len < 200; ++len) {
    for (int k = 0; k < 20; ++k) expect_same(random_valid_utf8(rng, len));
  }
}

TEST(Utf8ToUtf16Vector, MatchesScalarOnCorpora) {
  Rng rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const Script script = kAllScripts[trial % std::size(kAllScripts)];
    const Bytes corpus = generate({script, 1 + below(rng, 2000), rng()});
    expect_same(corpus);
    expect_same(inject_at_boundary(rng, corpus));
  }
}

TEST(Utf8ToUtf16Vector, MatchesScalarOnGeneratedInputs) {
  Rng rng(43);
  for (int trial = 0; trial < 100000; ++trial) {
    Bytes in;
    const std::size_t len = below(rng, trial % 16 == 0 ? 2048 : 256);
    switch (trial % 4) {
      case 0: in = random_valid_utf8(rng, len); break;
      case 1: in = random_mutated_utf8(rng, len); break;
      case 2: in = random_bytes(rng, len, true); break;
      default: in = random_bytes(rng, len, false); break;
    }
    ASSERT_NO_FATAL_FAILURE(expect_same(in)) << "trial " << trial;
  }
}

TEST(Utf8ToUtf16Vector, FastPathsAgreeWithKeyedPath) {
  Rng rng(47);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::array<int, 4> weights =
        trial % 3 == 0 ? std::array<int, 4>{0, 1, 0, 0}
        : trial % 3 == 1 ? std::array<int, 4>{0, 0, 1, 0}
                         : std::array<int, 4>{1, 1, 1, 1};
    const auto cps = random_scalars(rng, below(rng, 600), weights);
    const Bytes in = utf8_of(cps);
    const auto keyed = vector(in, {false, false});
    const auto fast = vector(in);
    ASSERT_TRUE(fast.result.ok());
    ASSERT_EQ(keyed.result, fast.result);
    ASSERT_EQ(keyed.words, fast.words);
    ASSERT_EQ(fast.words, utf16_of(cps));
  }
}

TEST(Utf8ToUtf16Vector, CharactersStraddlingBlocks) {
  for (std::size_t pad = 0; pad < 192; ++pad) {
    for (const auto& unit : {Bytes{0xC2, 0xA2}, Bytes{0xE4, 0xBD, 0xA0}, Bytes{0xF0, 0x9F, 0x98, 0x80}}) {
      Bytes in(pad, 'x');
      for (int i = 0; i < 40; ++i) in.insert(in.end(), unit.begin(), unit.end());
      ASSERT_NO_FATAL_FAILURE(expect_same(in));
      ASSERT_NO_FATAL_FAILURE(expect_same(in, {false, true}));
      ASSERT_NO_FATAL_FAILURE(expect_same(in, {false, false}));
    }
  }
}

TEST(Utf8ToUtf16Vector, RejectsUndersizedOutput) {
  const Bytes in(40, 'a');
  Words out(39);
  EXPECT_THROW(transcode_utf8_to_utf16_vector(in, out), std::length_error);
}
