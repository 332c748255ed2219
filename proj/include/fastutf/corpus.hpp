#pragma once

// Synthetic benchmark text and raw file I/O.
//
// A corpus is a pure function of (script, size, seed). Code points are drawn
// uniformly from fixed per-script ranges with an mt19937_64 generator whose
// 64-bit outputs are reduced to a range by multiply-shift
// ((x * range) >> 64), so any implementation can regenerate the same bytes.
// A space follows every 8th character and a newline (instead of the space)
// every 128th.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

namespace fastutf {

enum class Script : std::uint8_t {
  Ascii,             // U+0021..U+007E
  Latin1Supplement,  // U+00C0..U+00FF
  Arabic,            // U+0621..U+064A
  Hebrew,            // U+05D0..U+05EA
  Chinese,           // U+4E00..U+9FFF
  Japanese,          // U+3041..U+3096, U+30A1..U+30FA
  Emoji,             // U+1F600..U+1F64F
  Mixed,             // 40% Ascii, 20% two-byte, 30% three-byte, 10% Emoji
};

inline constexpr Script kAllScripts[] = {
    Script::Ascii,   Script::Latin1Supplement, Script::Arabic, Script::Hebrew,
    Script::Chinese, Script::Japanese,         Script::Emoji,  Script::Mixed,
};

inline constexpr std::string_view kCorpusRngId = "mt19937_64+mulshift";
inline constexpr std::size_t kSpaceEvery = 8;
inline constexpr std::size_t kNewlineEvery = 128;

std::string_view to_string(Script script) noexcept;
std::optional<Script> parse_script(std::string_view name) noexcept;

struct CorpusSpec {
  Script script = Script::Ascii;
  std::size_t size_bytes = 0;
  std::uint64_t seed = 0;
};

/// Valid UTF-8 of at most size_bytes bytes, and within one character of it.
std::vector<std::uint8_t> generate(const CorpusSpec& spec);

enum class Encoding : std::uint8_t { Utf8, Utf16Le, Utf16Be };

std::string_view to_string(Encoding encoding) noexcept;
std::optional<Encoding> parse_encoding(std::string_view name) noexcept;
constexpr bool is_utf16(Encoding e) noexcept { return e != Encoding::Utf8; }

/// UTF-8 bytes or native-order UTF-16 words.
using TextBuffer = std::variant<std::vector<std::uint8_t>, std::vector<char16_t>>;

/// The file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A UTF-16 file whose byte count is odd.
class OddLengthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Loads a file without validating it. BOM bytes are ordinary data.
TextBuffer load_file(const std::filesystem::path& path, Encoding encoding);

/// Byte-order conversion between serialized UTF-16 and native words.
std::vector<char16_t> words_from_bytes(std::span<const std::uint8_t> bytes, Encoding order);
std::vector<std::uint8_t> bytes_from_words(std::span<const char16_t> words, Encoding order);

}  // namespace fastutf
