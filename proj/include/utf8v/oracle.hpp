// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "utf8v/verdict.hpp"

namespace utf8v {

// Reference validator. Written for auditability, not speed: one character per
// loop iteration, structural rules checked before range rules, every error
// anchored at the leading byte of the offending sequence. Every other
// validator in this library is tested against it.
verdict oracle_validate(bytes_view input);

// A mechanically encoded value. encode_code_point() applies the shortest-form
// rule to any value up to 0x1FFFFF, surrogates and values beyond U+10FFFF
// included, so tests can fabricate precisely malformed sequences.
struct encoded_char {
  std::array<std::uint8_t, 4> bytes{};
  std::uint8_t size = 0;

  bytes_view view() const { return {bytes.data(), size}; }
};

// Throws std::out_of_range for cp > 0x1FFFFF (not expressible in four bytes).
encoded_char encode_code_point(std::uint32_t cp);

}  // namespace utf8v
