#include "fastutf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "fastutf/scalar.hpp"
#include "fastutf/utf16_to_utf8.hpp"
#include "fastutf/utf8_to_utf16.hpp"
#include "fastutf/validate.hpp"
#include "json.hpp"
#include "simd.hpp"

namespace fastutf {

std::string_view to_string(BenchTask task) noexcept {
  switch (task) {
    case BenchTask::Utf8ToUtf16: return "utf8-to-utf16";
    case BenchTask::Utf16ToUtf8: return "utf16-to-utf8";
    case BenchTask::ValidateUtf8: return "validate-utf8";
  }
  return "unknown";
}

std::optional<BenchTask> parse_bench_task(std::string_view name) noexcept {
  for (BenchTask t : {BenchTask::Utf8ToUtf16, BenchTask::Utf16ToUtf8, BenchTask::ValidateUtf8}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Kernel kernel) noexcept {
  return kernel == Kernel::Scalar ? "scalar" : "vector";
}

void summarize(std::span<const double> seconds, BenchReport& report) {
  if (seconds.empty()) throw std::invalid_argument("summarize: no samples");
  report.iterations = seconds.size();
  report.min_seconds = *std::min_element(seconds.begin(), seconds.end());
  report.mean_seconds =
      std::accumulate(seconds.begin(), seconds.end(), 0.0) / static_cast<double>(seconds.size());
  report.throughput_bytes_per_second =
      report.min_seconds > 0 ? static_cast<double>(report.input_bytes) / report.min_seconds : 0.0;
  report.spread =
      report.min_seconds > 0 ? (report.mean_seconds - report.min_seconds) / report.min_seconds : 0.0;
  report.accuracy_warning = report.spread > kAccuracyTolerance;
}

BenchWorkload::BenchWorkload(BenchTask task, std::vector<std::uint8_t> utf8)
    : task_(task), utf8_(std::move(utf8)) {
  if (!validate_utf8_scalar(utf8_).ok()) {
    throw std::invalid_argument("bench corpus is not valid UTF-8");
  }
  switch (task_) {
    case BenchTask::Utf8ToUtf16:
      utf16_out_.resize(utf16_capacity_for(utf8_.size()));
      break;
    case BenchTask::Utf16ToUtf8: {
      std::vector<char16_t> words(utf16_capacity_for(utf8_.size()));
      const auto r = transcode_utf8_to_utf16_scalar(utf8_, words);
      words.resize(r.units_written);
      utf16_ = std::move(words);
      utf8_out_.resize(utf8_capacity_for(utf16_.size()));
      break;
    }
    case BenchTask::ValidateUtf8:
      break;
  }
}

std::size_t BenchWorkload::input_bytes() const noexcept {
  return task_ == BenchTask::Utf16ToUtf8 ? utf16_.size() * sizeof(char16_t) : utf8_.size();
}

std::size_t BenchWorkload::run_once(Kernel kernel) {
  const bool vec = kernel == Kernel::Vector;
  switch (task_) {
    case BenchTask::Utf8ToUtf16:
      return (vec ? transcode_utf8_to_utf16_vector(utf8_, utf16_out_)
                  : transcode_utf8_to_utf16_scalar(utf8_, utf16_out_))
          .units_written;
    case BenchTask::Utf16ToUtf8:
      return (vec ? transcode_utf16_to_utf8_vector(utf16_, utf8_out_)
                  : transcode_utf16_to_utf8_scalar(utf16_, utf8_out_))
          .units_written;
    case BenchTask::ValidateUtf8:
      return (vec ? validate_utf8_vector(utf8_) : validate_utf8_scalar(utf8_)).ok() ? 1 : 0;
  }
  return 0;
}

BenchReport run_bench(BenchWorkload& workload, Kernel kernel, std::size_t iterations) {
  if (iterations == 0) throw std::invalid_argument("run_bench: iterations must be positive");
  BenchReport report;
  report.task = std::string(to_string(workload.task()));
  report.kernel = std::string(to_string(kernel));
  report.input_bytes = workload.input_bytes();
  report.backend = simd::kBackend;

  std::vector<double> samples;
  samples.reserve(iterations);
  volatile std::size_t sink = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto start = std::chrono::steady_clock::now();
    sink = sink + workload.run_once(kernel);
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }
  summarize(samples, report);
  return report;
}

std::string to_json_line(const BenchReport& r) {
  nlohmann::ordered_json j;
  j["task"] = r.task;
  j["kernel"] = r.kernel;
  j["corpus"] = r.corpus;
  j["corpus_digest"] = r.corpus_digest;
  j["rng"] = r.rng;
  j["backend"] = r.backend;
  j["input_bytes"] = r.input_bytes;
  j["iterations"] = r.iterations;
  j["min_seconds"] = r.min_seconds;
  j["mean_seconds"] = r.mean_seconds;
  j["throughput_bytes_per_second"] = r.throughput_bytes_per_second;
  j["spread"] = r.spread;
  j["accuracy_warning"] = r.accuracy_warning;
  if (r.speedup_vs_scalar) j["speedup_vs_scalar"] = *r.speedup_vs_scalar;
  return j.dump();
}

std::string to_text(const BenchReport& r) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "%-14s %-7s %s\n", r.task.c_str(), r.kernel.c_str(),
                r.corpus.c_str());
  out += line;
  std::snprintf(line, sizeof line,
                "  %zu bytes x %zu iterations: min %.3f us, mean %.3f us, %.3f GB/s\n",
                r.input_bytes, r.iterations, r.min_seconds * 1e6, r.mean_seconds * 1e6,
                r.throughput_bytes_per_second / 1e9);
  out += line;
  if (r.accuracy_warning) {
    std::snprintf(line, sizeof line, "  warning: mean exceeds min by %.1f%%\n", r.spread * 100);
    out += line;
  }
  if (r.speedup_vs_scalar) {
    std::snprintf(line, sizeof line, "  speedup vs scalar: %.2fx\n", *r.speedup_vs_scalar);
    out += line;
  }
  return out;
}

}  // namespace fastutf
