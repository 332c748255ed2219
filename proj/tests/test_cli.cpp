#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fastutf/cli.hpp"
#include "fastutf/corpus.hpp"
#include "fastutf/scalar.hpp"
#include "fastutf/tables.hpp"
#include "json.hpp"

using namespace fastutf;
namespace fs = std::filesystem;

namespace {

using Bytes = std::vector<std::uint8_t>;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fastutf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fastutf-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string file(const std::string& name, const Bytes& bytes) const {
    write_file(dir_ / name, bytes);
    return path(name);
  }
  Bytes read(const std::string& name) const { return read_file(dir_ / name); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ValidateAcceptsValidFile) {
  const auto r = run({"validate", file("ok", {'h', 0xC3, 0xA9, 'l', 'l', 'o'})});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "valid\n");
}

TEST_F(CliTest, ValidateReportsKindAndIndex) {
  const auto r = run({"validate", file("bad", {'a', 'b', 0xFF})});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.out.find("HeaderBits"), std::string::npos);
  EXPECT_NE(r.out.find("byte 2"), std::string::npos);
}

TEST_F(CliTest, ValidateUtf16) {
  EXPECT_EQ(run({"validate", "--encoding", "utf16le", file("le", {0x3D, 0xD8, 0x00, 0xDE})}).code,
            cli::kOk);
  const auto r = run({"validate", "--encoding", "utf16be", file("be", {0x00, 0x41, 0xDC, 0x00})});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.out.find("Surrogate at word 1"), std::string::npos);
  EXPECT_EQ(run({"validate", "--encoding", "utf16le", file("odd", {0x41})}).code,
            cli::kInvalidInput);
}

TEST_F(CliTest, MissingFileIsIoFailure) {
  EXPECT_EQ(run({"validate", path("absent")}).code, cli::kIoFailure);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"validate"}).code, cli::kUsage);
  EXPECT_EQ(run({"validate", "--encoding", "latin1", path("x")}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const auto same = run({"transcode", "--from", "utf8", "--to", "utf8", "-o", path("o"),
                         file("in", {'a'})});
  EXPECT_EQ(same.code, cli::kUsage);
}

TEST_F(CliTest, TranscodeExamples) {
  ASSERT_EQ(run({"transcode", "--from", "utf8", "--to", "utf16le", "-o", path("ab16"),
                 file("ab", {'A', 'B'})})
                .code,
            cli::kOk);
  EXPECT_EQ(read("ab16"), Bytes({0x41, 0x00, 0x42, 0x00}));

  ASSERT_EQ(run({"transcode", "--from", "utf16le", "--to", "utf8", "-o", path("emoji8"),
                 file("emoji16", {0x3D, 0xD8, 0x00, 0xDE})})
                .code,
            cli::kOk);
  EXPECT_EQ(read("emoji8"), Bytes({0xF0, 0x9F, 0x98, 0x80}));
}

TEST_F(CliTest, TranscodeInvalidInputReportsOnStderr) {
  const auto r = run({"transcode", "--from", "utf8", "--to", "utf16be", "-o", path("out"),
                      file("in", {'a', 0xED, 0xA0, 0x80})});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("Surrogate at byte 1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, KernelsProduceIdenticalFiles) {
  const std::string in = file("mixed", generate({Script::Mixed, 50000, 8}));
  for (const std::string to : {"utf16le", "utf16be"}) {
    ASSERT_EQ(run({"transcode", "--from", "utf8", "--to", to, "--kernel", "scalar", "-o",
                   path("s"), in})
                  .code,
              cli::kOk);
    ASSERT_EQ(run({"transcode", "--from", "utf8", "--to", to, "--kernel", "vector", "-o",
                   path("v"), in})
                  .code,
              cli::kOk);
    EXPECT_EQ(read("s"), read("v"));
  }
}

TEST_F(CliTest, RoundTripsReproduceTheFile) {
  const Bytes original = generate({Script::Emoji, 4000, 2});
  const std::string in = file("orig", original);
  ASSERT_EQ(run({"transcode", "--from", "utf8", "--to", "utf16be", "-o", path("be"), in}).code, 0);
  ASSERT_EQ(run({"transcode", "--from", "utf16be", "--to", "utf16le", "-o", path("le"),
                 path("be")})
                .code,
            0);
  ASSERT_EQ(run({"transcode", "--from", "utf16le", "--to", "utf8", "-o", path("back"),
                 path("le")})
                .code,
            0);
  EXPECT_EQ(read("back"), original);
  ASSERT_EQ(run({"transcode", "--from", "utf16le", "--to", "utf16be", "-o", path("be2"),
                 path("le")})
                .code,
            0);
  EXPECT_EQ(read("be2"), read("be"));
}

TEST_F(CliTest, ByteOrderMarkIsData) {
  ASSERT_EQ(run({"transcode", "--from", "utf8", "--to", "utf16le", "-o", path("out"),
                 file("bom", {0xEF, 0xBB, 0xBF, 'x'})})
                .code,
            0);
  EXPECT_EQ(read("out"), Bytes({0xFF, 0xFE, 'x', 0x00}));
}

TEST_F(CliTest, Generate) {
  ASSERT_EQ(run({"generate", "--script", "chinese", "--size", "300", "-o", path("zh")}).code, 0);
  const Bytes zh = read("zh");
  EXPECT_LE(zh.size(), 300u);
  EXPECT_GE(zh.size(), 297u);
  EXPECT_TRUE(validate_utf8_scalar(zh).ok());

  ASSERT_EQ(run({"generate", "--script", "ascii", "--size", "0", "-o", path("empty")}).code, 0);
  EXPECT_TRUE(read("empty").empty());

  ASSERT_EQ(run({"generate", "--script", "mixed", "--size", "999", "--seed", "4", "-o",
                 path("a")})
                .code,
            0);
  ASSERT_EQ(run({"generate", "--script", "mixed", "--size", "999", "--seed", "4", "-o",
                 path("b")})
                .code,
            0);
  EXPECT_EQ(read("a"), read("b"));
  EXPECT_EQ(run({"generate", "--script", "mixed", "--size", "9", "-o", path("no/dir/x")}).code,
            cli::kIoFailure);
}

TEST_F(CliTest, BenchBothPrintsSpeedup) {
  const auto r = run({"bench", "--task", "utf8-to-utf16", "--kernel", "both", "--script", "ascii",
                      "--size", "1000000", "--iterations", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("speedup vs scalar"), std::string::npos);
  EXPECT_NE(r.out.find("GB/s"), std::string::npos);
}

TEST_F(CliTest, BenchJsonIsReproducible) {
  const std::vector<std::string> args = {"bench",  "--task", "validate-utf8", "--script",
                                         "arabic", "--size", "20000",         "--seed",
                                         "9",      "--iterations", "5",       "--json",
                                         "--kernel", "both"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  std::istringstream la(a.out), lb(b.out);
  std::string line_a, line_b;
  int records = 0;
  nlohmann::json last;
  while (std::getline(la, line_a) && std::getline(lb, line_b)) {
    const auto ja = nlohmann::json::parse(line_a);
    last = ja;
    const auto jb = nlohmann::json::parse(line_b);
    EXPECT_EQ(ja["corpus_digest"], jb["corpus_digest"]);
    EXPECT_EQ(ja["rng"], "mt19937_64+mulshift");
    EXPECT_EQ(ja["input_bytes"], jb["input_bytes"]);
    EXPECT_GT(ja["throughput_bytes_per_second"].get<double>(), 0);
    ++records;
  }
  EXPECT_EQ(records, 2);
  EXPECT_TRUE(last.contains("speedup_vs_scalar"));
}

TEST_F(CliTest, BenchRejectsInvalidCorpus) {
  const auto r = run({"bench", "--task", "utf8-to-utf16", "--corpus", file("bad", {0xC0, 0xAF}),
                      "--iterations", "3"});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("Overlong"), std::string::npos);
  EXPECT_EQ(run({"bench", "--task", "utf8-to-utf16"}).code, cli::kUsage);
  EXPECT_EQ(run({"bench", "--task", "utf8-to-utf16", "--corpus", path("missing")}).code,
            cli::kIoFailure);
}

TEST_F(CliTest, BenchFromCorpusFile) {
  const auto r = run({"bench", "--task", "utf16-to-utf8", "--corpus",
                      file("c", generate({Script::Japanese, 30000, 1})), "--iterations", "3",
                      "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["task"], "utf16-to-utf8");
  EXPECT_EQ(j["kernel"], "vector");
  EXPECT_EQ(j["rng"], "");
}

TEST_F(CliTest, TablesDigestAndDump) {
  const auto r = run({"tables", "--dump", path("tables.bin")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sha256 " + tables_digest() + "\n");
  EXPECT_EQ(read("tables.bin"), serialize_tables(tables()));
}

TEST(ToolBinary, ExitCodesReachTheShell) {
  const std::string tool = FASTUTF_TOOL_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("tables"), 0);
  EXPECT_EQ(status("validate /nonexistent/file"), 3);
  EXPECT_EQ(status("bogus"), 2);
}
