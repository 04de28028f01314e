// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/fsm.hpp"

#include <algorithm>
#include <optional>

namespace utf8v {

fsm_state validate_fsm(bytes_view input, fsm_state start) {
  const std::uint8_t* cls = k_fsm_tables.class_of.data();
  const std::uint8_t* next = k_fsm_tables.next.data();
  std::uint8_t s = static_cast<std::uint8_t>(start);
  for (std::uint8_t b : input) s = next[s + cls[b]];
  return static_cast<fsm_state>(s);
}

bool validate_fsm_interleaved(bytes_view input) {
  const std::size_t n = input.size();
  if (n < 32) return validate_fsm(input) == fsm_state::valid;

  // A region must begin on a non-continuation byte so that, for well-formed
  // input, the cut falls on a character boundary and validity decomposes.
  const auto region_start = [&](std::size_t p) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < 4; ++k)
      if ((input[p + k] & 0xC0) != 0x80) return p + k;
    return std::nullopt;  // four continuations in a row: malformed
  };
  const auto s1 = region_start(n / 3);
  if (!s1) return false;
  const auto s2 = region_start(2 * n / 3);
  if (!s2) return false;
  const std::size_t p1 = *s1, p2 = *s2;

  const std::uint8_t* cls = k_fsm_tables.class_of.data();
  const std::uint8_t* next = k_fsm_tables.next.data();
  const std::uint8_t* a = input.data();
  const std::uint8_t* b = input.data() + p1;
  const std::uint8_t* c = input.data() + p2;
  const std::size_t la = p1, lb = p2 - p1, lc = n - p2;
  const std::size_t m = std::min({la, lb, lc});

  std::uint8_t sa = 0, sb = 0, sc = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sa = next[sa + cls[a[k]]];
    sb = next[sb + cls[b[k]]];
    sc = next[sc + cls[c[k]]];
  }
  for (std::size_t k = m; k < la; ++k) sa = next[sa + cls[a[k]]];
  for (std::size_t k = m; k < lb; ++k) sb = next[sb + cls[b[k]]];
  for (std::size_t k = m; k < lc; ++k) sc = next[sc + cls[c[k]]];

  const auto valid = static_cast<std::uint8_t>(fsm_state::valid);
  return sa == valid && sb == valid && sc == valid;
}

}  // namespace utf8v
