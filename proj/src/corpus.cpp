#include "fastutf/corpus.hpp"

#include <array>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "codec_inline.hpp"

namespace fastutf {
namespace {

struct Range {
  char32_t lo;
  char32_t hi;  // inclusive
};

constexpr Range kAscii[] = {{0x21, 0x7E}};
constexpr Range kLatin1[] = {{0xC0, 0xFF}};
constexpr Range kArabic[] = {{0x0621, 0x064A}};
constexpr Range kHebrew[] = {{0x05D0, 0x05EA}};
constexpr Range kChinese[] = {{0x4E00, 0x9FFF}};
constexpr Range kJapanese[] = {{0x3041, 0x3096}, {0x30A1, 0x30FA}};
constexpr Range kEmoji[] = {{0x1F600, 0x1F64F}};
constexpr Range kTwoByteMix[] = {{0xC0, 0xFF}, {0x0621, 0x064A}, {0x05D0, 0x05EA}};
constexpr Range kThreeByteMix[] = {{0x4E00, 0x9FFF}, {0x3041, 0x3096}, {0x30A1, 0x30FA}};

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng_()) * bound) >> 64);
  }

  char32_t from(std::span<const Range> ranges) {
    std::uint64_t total = 0;
    for (const Range& r : ranges) total += r.hi - r.lo + 1;
    std::uint64_t k = below(total);
    for (const Range& r : ranges) {
      const std::uint64_t width = r.hi - r.lo + 1;
      if (k < width) return static_cast<char32_t>(r.lo + k);
      k -= width;
    }
    return ranges.back().hi;
  }

 private:
  std::mt19937_64 rng_;
};

char32_t next_char(Script script, Draw& draw) {
  switch (script) {
    case Script::Ascii: return draw.from(kAscii);
    case Script::Latin1Supplement: return draw.from(kLatin1);
    case Script::Arabic: return draw.from(kArabic);
    case Script::Hebrew: return draw.from(kHebrew);
    case Script::Chinese: return draw.from(kChinese);
    case Script::Japanese: return draw.from(kJapanese);
    case Script::Emoji: return draw.from(kEmoji);
    case Script::Mixed: {
      const auto bucket = draw.below(10);
      if (bucket < 4) return draw.from(kAscii);
      if (bucket < 6) return draw.from(kTwoByteMix);
      if (bucket < 9) return draw.from(kThreeByteMix);
      return draw.from(kEmoji);
    }
  }
  return U'?';
}

constexpr std::array<std::pair<Script, std::string_view>, 8> kScriptNames = {{
    {Script::Ascii, "ascii"},
    {Script::Latin1Supplement, "latin1"},
    {Script::Arabic, "arabic"},
    {Script::Hebrew, "hebrew"},
    {Script::Chinese, "chinese"},
    {Script::Japanese, "japanese"},
    {Script::Emoji, "emoji"},
    {Script::Mixed, "mixed"},
}};

constexpr std::array<std::pair<Encoding, std::string_view>, 3> kEncodingNames = {{
    {Encoding::Utf8, "utf8"},
    {Encoding::Utf16Le, "utf16le"},
    {Encoding::Utf16Be, "utf16be"},
}};

}  // namespace

std::string_view to_string(Script script) noexcept {
  for (const auto& [s, name] : kScriptNames) {
    if (s == script) return name;
  }
  return "unknown";
}

std::optional<Script> parse_script(std::string_view name) noexcept {
  for (const auto& [s, n] : kScriptNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Encoding encoding) noexcept {
  for (const auto& [e, name] : kEncodingNames) {
    if (e == encoding) return name;
  }
  return "unknown";
}

std::optional<Encoding> parse_encoding(std::string_view name) noexcept {
  for (const auto& [e, n] : kEncodingNames) {
    if (n == name) return e;
  }
  return std::nullopt;
}

std::vector<std::uint8_t> generate(const CorpusSpec& spec) {
  std::vector<std::uint8_t> out;
  out.reserve(spec.size_bytes);
  Draw draw(spec.seed);
  std::array<std::uint8_t, 4> buf;
  std::size_t chars = 0;
  while (true) {
    const std::size_t len = detail::put_utf8(next_char(spec.script, draw), buf.data());
    if (out.size() + len > spec.size_bytes) break;
    out.insert(out.end(), buf.begin(), buf.begin() + len);
    ++chars;
    if (chars % kSpaceEvery == 0) {
      if (out.size() + 1 > spec.size_bytes) break;
      out.push_back(chars % kNewlineEvery == 0 ? '\n' : ' ');
    }
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<char16_t> words_from_bytes(std::span<const std::uint8_t> bytes, Encoding order) {
  if (bytes.size() % 2 != 0) {
    throw OddLengthError("UTF-16 input has an odd number of bytes (" +
                         std::to_string(bytes.size()) + ")");
  }
  std::vector<char16_t> words(bytes.size() / 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto lo = bytes[2 * i];
    const auto hi = bytes[2 * i + 1];
    words[i] = order == Encoding::Utf16Be ? char16_t((lo << 8) | hi) : char16_t((hi << 8) | lo);
  }
  return words;
}

std::vector<std::uint8_t> bytes_from_words(std::span<const char16_t> words, Encoding order) {
  std::vector<std::uint8_t> bytes(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto lo = static_cast<std::uint8_t>(words[i] & 0xFF);
    const auto hi = static_cast<std::uint8_t>(words[i] >> 8);
    bytes[2 * i] = order == Encoding::Utf16Be ? hi : lo;
    bytes[2 * i + 1] = order == Encoding::Utf16Be ? lo : hi;
  }
  return bytes;
}

TextBuffer load_file(const std::filesystem::path& path, Encoding encoding) {
  std::vector<std::uint8_t> bytes = read_file(path);
  if (encoding == Encoding::Utf8) return bytes;
  return words_from_bytes(bytes, encoding);
}

}  // namespace fastutf
