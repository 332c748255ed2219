#include "fastutf/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fastutf/bench.hpp"
#include "fastutf/corpus.hpp"
#include "fastutf/digest.hpp"
#include "fastutf/scalar.hpp"
#include "fastutf/tables.hpp"
#include "fastutf/utf16_to_utf8.hpp"
#include "fastutf/utf8_to_utf16.hpp"
#include "fastutf/validate.hpp"

namespace fastutf::cli {
namespace {

const std::vector<std::string> kEncodings = {"utf8", "utf16le", "utf16be"};

struct ValidateArgs {
  std::string encoding = "utf8";
  std::string file;
};

struct TranscodeArgs {
  std::string from;
  std::string to;
  std::string kernel = "auto";
  std::string output;
  std::string file;
};

struct GenerateArgs {
  std::string script;
  std::size_t size = 0;
  std::uint64_t seed = 1;
  std::string output;
};

struct BenchArgs {
  std::string task;
  std::string kernel = "vector";
  std::size_t iterations = kDefaultIterations;
  std::string corpus;
  std::string script;
  std::size_t size = 1 << 20;
  std::uint64_t seed = 1;
  bool json = false;
};

struct TablesArgs {
  std::string dump;
};

void report_invalid(std::ostream& os, const TranscodeError& e, bool words) {
  os << "invalid: " << to_string(e.kind) << " at " << (words ? "word " : "byte ") << e.index
     << '\n';
}

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const Encoding enc = *parse_encoding(a.encoding);
  const TextBuffer text = load_file(a.file, enc);
  TranscodeResult r;
  if (const auto* bytes = std::get_if<std::vector<std::uint8_t>>(&text)) {
    r = validate_utf8_vector(*bytes);
  } else {
    r = validate_utf16_scalar(std::get<std::vector<char16_t>>(text));
  }
  if (r.error) {
    report_invalid(out, *r.error, is_utf16(enc));
    return kInvalidInput;
  }
  out << "valid\n";
  return kOk;
}

int cmd_transcode(const TranscodeArgs& a, std::ostream& err) {
  const Encoding from = *parse_encoding(a.from);
  const Encoding to = *parse_encoding(a.to);
  if (from == to) {
    err << "transcode: --from and --to must differ\n";
    return kUsage;
  }
  const bool vector = a.kernel != "scalar";
  const TextBuffer text = load_file(a.file, from);

  std::vector<std::uint8_t> result;
  if (is_utf16(from) && is_utf16(to)) {
    result = bytes_from_words(std::get<std::vector<char16_t>>(text), to);
  } else if (from == Encoding::Utf8) {
    const auto& bytes = std::get<std::vector<std::uint8_t>>(text);
    std::vector<char16_t> words(utf16_capacity_for(bytes.size()));
    const TranscodeResult r = vector ? transcode_utf8_to_utf16_vector(bytes, words)
                                     : transcode_utf8_to_utf16_scalar(bytes, words);
    if (r.error) {
      report_invalid(err, *r.error, false);
      return kInvalidInput;
    }
    words.resize(r.units_written);
    result = bytes_from_words(words, to);
  } else {
    const auto& words = std::get<std::vector<char16_t>>(text);
    result.resize(utf8_capacity_for(words.size()));
    const TranscodeResult r = vector ? transcode_utf16_to_utf8_vector(words, result)
                                     : transcode_utf16_to_utf8_scalar(words, result);
    if (r.error) {
      report_invalid(err, *r.error, true);
      return kInvalidInput;
    }
    result.resize(r.units_written);
  }
  write_file(a.output, result);
  return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const CorpusSpec spec{*parse_script(a.script), a.size, a.seed};
  const auto bytes = generate(spec);
  write_file(a.output, bytes);
  out << "wrote " << bytes.size() << " bytes to " << a.output << '\n';
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::uint8_t> corpus;
  std::string descriptor;
  std::string rng;
  if (!a.corpus.empty()) {
    corpus = read_file(a.corpus);
    descriptor = "file=" + a.corpus;
  } else if (!a.script.empty()) {
    corpus = generate({*parse_script(a.script), a.size, a.seed});
    descriptor = "script=" + a.script + " size=" + std::to_string(a.size) +
                 " seed=" + std::to_string(a.seed);
    rng = std::string(kCorpusRngId);
  } else {
    err << "bench: one of --corpus or --script is required\n";
    return kUsage;
  }
  if (const auto v = validate_utf8_scalar(corpus); v.error) {
    err << "bench: corpus rejected before timing: ";
    report_invalid(err, *v.error, false);
    return kInvalidInput;
  }
  const std::string digest = sha256_hex(corpus);

  BenchWorkload workload(*parse_bench_task(a.task), std::move(corpus));
  std::vector<Kernel> kernels;
  if (a.kernel == "scalar" || a.kernel == "both") kernels.push_back(Kernel::Scalar);
  if (a.kernel == "vector" || a.kernel == "both") kernels.push_back(Kernel::Vector);

  std::vector<BenchReport> reports;
  for (Kernel k : kernels) {
    BenchReport r = run_bench(workload, k, a.iterations);
    r.corpus = descriptor;
    r.corpus_digest = digest;
    r.rng = rng;
    reports.push_back(std::move(r));
  }
  if (reports.size() == 2 && reports[1].min_seconds > 0) {
    reports[1].speedup_vs_scalar = reports[0].min_seconds / reports[1].min_seconds;
  }
  for (const BenchReport& r : reports) {
    if (a.json) {
      out << to_json_line(r) << '\n';
    } else {
      out << to_text(r);
    }
  }
  return kOk;
}

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  if (!a.dump.empty()) write_file(a.dump, serialize_tables(tables()));
  out << "sha256 " << tables_digest() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validate and transcode UTF-8 / UTF-16 text", "fastutf"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check that a file is well-formed");
  validate->add_option("--encoding", va.encoding, "utf8, utf16le or utf16be")
      ->check(CLI::IsMember(kEncodings));
  validate->add_option("file", va.file)->required();

  TranscodeArgs ta;
  auto* transcode = app.add_subcommand("transcode", "Convert a file between encodings");
  transcode->add_option("--from", ta.from)->required()->check(CLI::IsMember(kEncodings));
  transcode->add_option("--to", ta.to)->required()->check(CLI::IsMember(kEncodings));
  transcode->add_option("--kernel", ta.kernel, "scalar, vector or auto")
      ->check(CLI::IsMember({"scalar", "vector", "auto"}));
  transcode->add_option("-o,--output", ta.output)->required();
  transcode->add_option("file", ta.file)->required();

  std::vector<std::string> script_names;
  for (Script s : kAllScripts) script_names.emplace_back(to_string(s));

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Write a synthetic corpus");
  gen->add_option("--script", ga.script)->required()->check(CLI::IsMember(script_names));
  gen->add_option("--size", ga.size, "target size in bytes")->required();
  gen->add_option("--seed", ga.seed);
  gen->add_option("-o,--output", ga.output)->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Measure throughput");
  bench->add_option("--task", ba.task)
      ->required()
      ->check(CLI::IsMember({"utf8-to-utf16", "utf16-to-utf8", "validate-utf8"}));
  bench->add_option("--kernel", ba.kernel, "scalar, vector or both")
      ->check(CLI::IsMember({"scalar", "vector", "both"}));
  bench->add_option("--iterations", ba.iterations)->check(CLI::PositiveNumber);
  auto* corpus_opt = bench->add_option("--corpus", ba.corpus, "UTF-8 corpus file");
  auto* script_opt =
      bench->add_option("--script", ba.script)->check(CLI::IsMember(script_names));
  corpus_opt->excludes(script_opt);
  bench->add_option("--size", ba.size);
  bench->add_option("--seed", ba.seed);
  bench->add_flag("--json", ba.json, "one JSON record per line");

  TablesArgs tb;
  auto* tbl = app.add_subcommand("tables", "Print the lookup-table digest");
  tbl->add_option("--dump", tb.dump, "write the canonical table serialization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(va, out);
    if (*transcode) return cmd_transcode(ta, err);
    if (*gen) return cmd_generate(ga, out);
    if (*bench) return cmd_bench(ba, out, err);
    if (*tbl) return cmd_tables(tb, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const OddLengthError& e) {
    err << "invalid: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace fastutf::cli
