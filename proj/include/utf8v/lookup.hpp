// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "utf8v/verdict.hpp"

namespace utf8v {

// One compiled-in kernel instantiation. The lane-level entry points exist so
// tests can compare backends against each other and against frozen lane
// values, not just against whole-buffer verdicts; each operates on exactly
// `width` bytes per argument.
struct lookup_backend {
  const char* name;   // "avx2", "ssse3", "scalar"
  std::size_t width;  // vector width in bytes
  bool (*validate)(const std::uint8_t* data, std::size_t size);
  void (*classify_lanes)(const std::uint8_t* input, const std::uint8_t* previous,
                         std::uint8_t* out);
  void (*length_error_lanes)(const std::uint8_t* input,
                             const std::uint8_t* previous, std::uint8_t* out);
  void (*incomplete_lanes)(const std::uint8_t* input, std::uint8_t* out);
  bool (*ops_self_test)(std::uint64_t seed);
};

// Backends usable on this machine, widest first; the scalar reference is
// always present and always last. Detection runs once.
std::span<const lookup_backend> lookup_backends();

// nullptr when the name is unknown or unsupported here.
const lookup_backend* find_lookup_backend(std::string_view name);

// Validates with the widest backend the machine supports.
bool validate_lookup(bytes_view input);

// Validates with the scalar reference kernels, whatever the machine supports.
bool validate_lookup_fallback(bytes_view input);

}  // namespace utf8v
