#include <gtest/gtest.h>

#include <map>

#include "fastutf/types.hpp"

using namespace fastutf;

TEST(SequenceLength, Examples) {
  EXPECT_EQ(utf8_sequence_length(0x41), Expected<int>(1));
  EXPECT_EQ(utf8_sequence_length(0xE4), Expected<int>(3));
  EXPECT_EQ(utf8_sequence_length(0xF8), Expected<int>(ErrorKind::HeaderBits));
  EXPECT_EQ(utf8_sequence_length(0x80), Expected<int>(ErrorKind::TooLong));
}

TEST(SequenceLength, PartitionsAllBytes) {
  std::map<int, int> lengths;
  int too_long = 0;
  int header = 0;
  for (int b = 0; b < 256; ++b) {
    const auto r = utf8_sequence_length(static_cast<std::uint8_t>(b));
    if (r) {
      ++lengths[*r];
    } else if (r.error() == ErrorKind::TooLong) {
      ++too_long;
    } else {
      EXPECT_EQ(r.error(), ErrorKind::HeaderBits);
      ++header;
    }
  }
  EXPECT_EQ(lengths[1], 128);
  EXPECT_EQ(lengths[2], 32);
  EXPECT_EQ(lengths[3], 16);
  EXPECT_EQ(lengths[4], 8);
  EXPECT_EQ(too_long, 64);
  EXPECT_EQ(header, 8);
}

TEST(Continuation, Examples) {
  EXPECT_TRUE(is_continuation(0xBD));
  EXPECT_FALSE(is_continuation(0x41));
  EXPECT_FALSE(is_continuation(0xC2));
  int count = 0;
  for (int b = 0; b < 256; ++b) count += is_continuation(static_cast<std::uint8_t>(b));
  EXPECT_EQ(count, 64);
}

TEST(ClassifyUtf16, Examples) {
  EXPECT_EQ(classify_utf16(0x0041), Utf16Class::Bmp);
  EXPECT_EQ(classify_utf16(0xD801), Utf16Class::HighSurrogate);
  EXPECT_EQ(classify_utf16(0xDC37), Utf16Class::LowSurrogate);
}

TEST(ClassifyUtf16, PartitionsAllWords) {
  int bmp = 0, high = 0, low = 0;
  for (std::uint32_t w = 0; w < 0x10000; ++w) {
    switch (classify_utf16(static_cast<char16_t>(w))) {
      case Utf16Class::Bmp: ++bmp; break;
      case Utf16Class::HighSurrogate: ++high; break;
      case Utf16Class::LowSurrogate: ++low; break;
    }
  }
  EXPECT_EQ(bmp, 63488);
  EXPECT_EQ(high, 1024);
  EXPECT_EQ(low, 1024);
}

TEST(ErrorKind, NamesAreDistinct) {
  std::map<std::string_view, int> seen;
  for (ErrorKind k : kAllErrorKinds) ++seen[to_string(k)];
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(to_string(ErrorKind::TooShort), "TooShort");
}

TEST(TranscodeResult, OkHasNoError) {
  const auto ok = TranscodeResult::success(7);
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.units_written, 7u);
  const auto bad = TranscodeResult::failure(ErrorKind::Overlong, 3, 2);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.error->index, 3u);
  EXPECT_EQ(bad.units_written, 2u);
}

TEST(ScalarValue, Lengths) {
  EXPECT_TRUE(is_scalar_value(0x10FFFF));
  EXPECT_FALSE(is_scalar_value(0x110000));
  EXPECT_FALSE(is_scalar_value(0xDFFF));
  EXPECT_EQ(utf8_length(0x7F), 1);
  EXPECT_EQ(utf8_length(0x80), 2);
  EXPECT_EQ(utf8_length(0xFFFF), 3);
  EXPECT_EQ(utf8_length(0x10000), 4);
  EXPECT_EQ(utf16_length(0xFFFF), 1);
  EXPECT_EQ(utf16_length(0x10000), 2);
}
