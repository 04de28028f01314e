// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "utf8v/oracle.hpp"

namespace utf8v {
namespace {

double steady_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double throughput(std::size_t bytes, double seconds) {
  return seconds > 0.0 ? static_cast<double>(bytes) / seconds : 0.0;
}

struct timing {
  double best = 0.0;
  double mean = 0.0;
};

timing time_passes(const named_validator& v, bytes_view input, int repeats,
                   const std::function<double()>& clock) {
  timing t;
  double sum = 0.0;
  for (int i = 0; i < repeats; ++i) {
    const double t0 = clock();
    const bool verdict = v.validate(input);
    const double t1 = clock();
    do_not_optimize(verdict);
    const double sample = t1 - t0;
    sum += sample;
    if (i == 0 || sample < t.best) t.best = sample;
  }
  t.mean = sum / repeats;
  return t;
}

void check_against_reference(const named_validator& v, bytes_view input,
                             const std::string& input_name) {
  const bool expected = oracle_validate(input).valid();
  if (v.validate(input) != expected)
    throw validator_mismatch("validator '" + v.name + "' disagrees with the "
                             "reference on input '" + input_name + "'");
}

}  // namespace

std::vector<bench_report> run_bench(std::span<const named_validator> validators,
                                    bytes_view input,
                                    const std::string& input_name,
                                    const bench_options& options) {
  if (options.repeats < 1)
    throw std::invalid_argument("repeats must be at least 1");
  const std::function<double()> clock =
      options.clock ? options.clock : steady_seconds;

  std::vector<std::uint8_t> doubled;
  if (options.compensate) {
    if (!oracle_validate(input).valid())
      throw std::invalid_argument(
          "compensated timing needs well-formed input");
    doubled.reserve(input.size() * 2);
    doubled.insert(doubled.end(), input.begin(), input.end());
    doubled.insert(doubled.end(), input.begin(), input.end());
  }

  // The correctness gate runs before any timing so a wrong validator can
  // never post a number.
  for (const named_validator& v : validators) {
    check_against_reference(v, input, input_name);
    if (options.compensate)
      check_against_reference(v, bytes_view(doubled), input_name + " doubled");
  }

  std::vector<bench_report> reports(validators.size());
  const auto bench_one = [&](std::size_t i) {
    const named_validator& v = validators[i];
    timing t = time_passes(v, input, options.repeats, clock);
    if (options.compensate) {
      const timing td =
          time_passes(v, bytes_view(doubled), options.repeats, clock);
      // Difference of the two runs; noise can invert an inequality, so the
      // result is clamped back to 0 <= best <= mean.
      t.best = std::max(td.best - t.best, 0.0);
      t.mean = std::max(td.mean - t.mean, t.best);
    }
    bench_report& r = reports[i];
    r.validator = v.name;
    r.input_name = input_name;
    r.input_bytes = input.size();
    r.repeats = options.repeats;
    r.best_seconds = t.best;
    r.mean_seconds = t.mean;
    r.best_throughput = throughput(input.size(), t.best);
    r.mean_throughput = throughput(input.size(), t.mean);
    r.compensated = options.compensate;
  };

  if (options.parallel) {
    std::vector<std::thread> threads;
    threads.reserve(validators.size());
    for (std::size_t i = 0; i < validators.size(); ++i)
      threads.emplace_back(bench_one, i);
    for (std::thread& th : threads) th.join();
  } else {
    for (std::size_t i = 0; i < validators.size(); ++i) bench_one(i);
  }
  return reports;
}

std::string emit_report(std::span<const bench_report> reports,
                        report_format format) {
  if (format == report_format::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const bench_report& r : reports) {
      out.push_back({{"validator", r.validator},
                     {"input_name", r.input_name},
                     {"input_bytes", r.input_bytes},
                     {"repeats", r.repeats},
                     {"best_seconds", r.best_seconds},
                     {"mean_seconds", r.mean_seconds},
                     {"best_throughput", r.best_throughput},
                     {"mean_throughput", r.mean_throughput},
                     {"compensated", r.compensated}});
    }
    return out.dump(2) + "\n";
  }

  std::size_t name_width = 9, input_width = 5;
  for (const bench_report& r : reports) {
    name_width = std::max(name_width, r.validator.size());
    input_width = std::max(input_width, r.input_name.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width + 2)) << "validator"
     << std::setw(static_cast<int>(input_width + 2)) << "input" << std::right
     << std::setw(12) << "bytes" << std::setw(12) << "best GB/s"
     << std::setw(12) << "mean GB/s" << "\n";
  os << std::fixed << std::setprecision(3);
  for (const bench_report& r : reports) {
    os << std::left << std::setw(static_cast<int>(name_width + 2)) << r.validator
       << std::setw(static_cast<int>(input_width + 2)) << r.input_name
       << std::right << std::setw(12) << r.input_bytes << std::setw(12)
       << r.best_throughput / 1e9 << std::setw(12) << r.mean_throughput / 1e9
       << "\n";
  }
  return os.str();
}

}  // namespace utf8v
