#pragma once

// Throughput measurement: the task runs `iterations` times over an
// in-memory buffer with a preallocated output, each call timed with a
// monotonic clock. Throughput is input volume over the fastest iteration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fastutf {

enum class BenchTask : std::uint8_t { Utf8ToUtf16, Utf16ToUtf8, ValidateUtf8 };
enum class Kernel : std::uint8_t { Scalar, Vector };

std::string_view to_string(BenchTask task) noexcept;
std::optional<BenchTask> parse_bench_task(std::string_view name) noexcept;
std::string_view to_string(Kernel kernel) noexcept;

inline constexpr std::size_t kDefaultIterations = 2000;

/// Relative mean-over-min spread above which a run is flagged as noisy.
inline constexpr double kAccuracyTolerance = 0.01;

struct BenchReport {
  std::string task;
  std::string kernel;
  std::string corpus;         // human-readable source description
  std::string corpus_digest;  // SHA-256 of the UTF-8 corpus bytes
  std::size_t input_bytes = 0;
  std::size_t iterations = 0;
  double min_seconds = 0;
  double mean_seconds = 0;
  double throughput_bytes_per_second = 0;
  double spread = 0;  // (mean - min) / min
  bool accuracy_warning = false;
  std::string rng;      // corpus generator id, empty for file corpora
  std::string backend;  // vector instruction set
  std::optional<double> speedup_vs_scalar;
};

/// Fills the timing fields of `report` from per-iteration durations.
void summarize(std::span<const double> seconds, BenchReport& report);

/// Input buffers for one task, prepared from a valid UTF-8 corpus.
class BenchWorkload {
 public:
  BenchWorkload(BenchTask task, std::vector<std::uint8_t> utf8);

  BenchTask task() const noexcept { return task_; }
  std::size_t input_bytes() const noexcept;
  const std::vector<std::uint8_t>& utf8() const noexcept { return utf8_; }

  /// One timed call; returns units written (or 0 for validation) so the
  /// work cannot be optimized away.
  std::size_t run_once(Kernel kernel);

 private:
  BenchTask task_;
  std::vector<std::uint8_t> utf8_;
  std::vector<char16_t> utf16_;
  std::vector<char16_t> utf16_out_;
  std::vector<std::uint8_t> utf8_out_;
};

/// Runs the workload and returns a report with timing fields filled in;
/// corpus fields are left to the caller.
BenchReport run_bench(BenchWorkload& workload, Kernel kernel, std::size_t iterations);

/// Single-line JSON record. Keys, in order: task, kernel, corpus,
/// corpus_digest, rng, backend, input_bytes, iterations, min_seconds,
/// mean_seconds, throughput_bytes_per_second, spread, accuracy_warning and,
/// when present, speedup_vs_scalar.
std::string to_json_line(const BenchReport& report);

/// Multi-line human-readable summary.
std::string to_text(const BenchReport& report);

}  // namespace fastutf
