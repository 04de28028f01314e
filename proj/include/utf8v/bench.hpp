// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "utf8v/verdict.hpp"

namespace utf8v {

// Timing results for one (validator, input) pair. With compensation the
// seconds are differences of two timed runs (doubled input minus the input
// itself), canceling fixed per-call overhead; input_bytes still describes
// the input, so throughput stays comparable across modes.
struct bench_report {
  std::string validator;
  std::string input_name;
  std::size_t input_bytes = 0;
  int repeats = 0;
  double best_seconds = 0.0;
  double mean_seconds = 0.0;
  double best_throughput = 0.0;  // bytes per second
  double mean_throughput = 0.0;
  bool compensated = false;
};

// A validation entry point under the name it is reported as. Only the
// valid/invalid bit is timed; offset reporting is not part of the contract.
struct named_validator {
  std::string name;
  std::function<bool(bytes_view)> validate;
};

struct bench_options {
  int repeats = 1000;
  bool compensate = false;
  bool parallel = false;  // across validators only, never within a loop
  // Monotonic seconds; tests inject a fake. Defaults to the steady clock.
  std::function<double()> clock;
};

// A validator returned the wrong verdict for the benchmarked input; no
// timing is reported for the run.
struct validator_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Times `repeats` whole-buffer passes per validator after checking each one
// against the reference verdict. Compensation requires well-formed input
// (the doubled buffer must be well formed too) and throws
// std::invalid_argument otherwise.
std::vector<bench_report> run_bench(std::span<const named_validator> validators,
                                    bytes_view input,
                                    const std::string& input_name,
                                    const bench_options& options);

enum class report_format : std::uint8_t { human, json };

// Human: aligned columns (validator, input, bytes, best GB/s, mean GB/s).
// Json: array of objects carrying every bench_report field.
std::string emit_report(std::span<const bench_report> reports,
                        report_format format);

// Keeps the computed verdict observable so the timed call cannot be elided.
inline void do_not_optimize(bool value) {
  asm volatile("" : : "r"(value) : "memory");
}

}  // namespace utf8v
