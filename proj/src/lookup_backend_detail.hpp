// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "utf8v/lookup.hpp"
#include "utf8v/lookup_kernel.hpp"

namespace utf8v::detail {

template <byte_vector V>
bool validate_entry(const std::uint8_t* data, std::size_t size) {
  return validate_with<V>(data, size);
}

template <byte_vector V>
void classify_entry(const std::uint8_t* input, const std::uint8_t* previous,
                    std::uint8_t* out) {
  classify(V::load(input), V::load(previous)).store(out);
}

template <byte_vector V>
void length_error_entry(const std::uint8_t* input, const std::uint8_t* previous,
                        std::uint8_t* out) {
  const V in = V::load(input);
  const V prev = V::load(previous);
  check_multibyte_lengths(in, prev, classify(in, prev)).store(out);
}

template <byte_vector V>
void incomplete_entry(const std::uint8_t* input, std::uint8_t* out) {
  check_incomplete(V::load(input)).store(out);
}

template <byte_vector V>
constexpr lookup_backend make_backend(const char* name) {
  return {name,
          V::width,
          &validate_entry<V>,
          &classify_entry<V>,
          &length_error_entry<V>,
          &incomplete_entry<V>,
          &vector_ops_self_test<V>};
}

// Implemented per backend translation unit.
const lookup_backend& scalar_backend();
#if defined(UTF8V_X86)
const lookup_backend& ssse3_backend();
const lookup_backend& avx2_backend();
#endif

}  // namespace utf8v::detail
