// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0

// Backend detection. This translation unit is compiled without ISA flags so
// no vector instruction can execute before its feature bit was checked.
#include "utf8v/lookup.hpp"

#include <vector>

#include "lookup_backend_detail.hpp"

namespace utf8v {
namespace {

std::vector<lookup_backend> detect_backends() {
  std::vector<lookup_backend> found;
#if defined(UTF8V_X86)
  if (__builtin_cpu_supports("avx2")) found.push_back(detail::avx2_backend());
  if (__builtin_cpu_supports("ssse3")) found.push_back(detail::ssse3_backend());
#endif
  found.push_back(detail::scalar_backend());
  return found;
}

}  // namespace

std::span<const lookup_backend> lookup_backends() {
  static const std::vector<lookup_backend> backends = detect_backends();
  return backends;
}

const lookup_backend* find_lookup_backend(std::string_view name) {
  for (const lookup_backend& backend : lookup_backends())
    if (name == backend.name) return &backend;
  return nullptr;
}

bool validate_lookup(bytes_view input) {
  return lookup_backends().front().validate(input.data(), input.size());
}

bool validate_lookup_fallback(bytes_view input) {
  return lookup_backends().back().validate(input.data(), input.size());
}

}  // namespace utf8v
