// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace utf8v {

using bytes_view = std::span<const std::uint8_t>;

// The six ways a byte sequence can fail validation. A well-formed character
// is a leading byte with 0, 2, 3, or 4 header bits followed by exactly the
// announced number of continuation bytes, encoding a shortest-form scalar
// value at most U+10FFFF and outside the surrogate block.
enum class error_kind : std::uint8_t {
  header_bits,  // leading byte has five or more header bits (F8..FF)
  too_short,    // leading byte not followed by enough continuation bytes
  too_long,     // continuation byte outside any character
  overlong,     // value fits a shorter encoding
  too_large,    // value above U+10FFFF
  surrogate,    // value in U+D800..U+DFFF
};

constexpr std::string_view to_string(error_kind k) {
  switch (k) {
    case error_kind::header_bits: return "header-bits";
    case error_kind::too_short: return "too-short";
    case error_kind::too_long: return "too-long";
    case error_kind::overlong: return "overlong";
    case error_kind::too_large: return "too-large";
    case error_kind::surrogate: return "surrogate";
  }
  return "unknown";
}

struct utf8_error {
  std::size_t offset;  // leading byte of the offending sequence; a stray
                       // continuation byte is its own sequence
  error_kind kind;
  bool operator==(const utf8_error&) const = default;
};

struct verdict {
  std::optional<utf8_error> error;

  bool valid() const noexcept { return !error.has_value(); }
  static verdict ok() { return {}; }
  static verdict fail(std::size_t offset, error_kind kind) {
    return {utf8_error{offset, kind}};
  }
  bool operator==(const verdict&) const = default;
};

}  // namespace utf8v
