// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/oracle.hpp"

#include <stdexcept>

namespace utf8v {

verdict oracle_validate(bytes_view input) {
  const std::size_t n = input.size();
  std::size_t i = 0;
  while (i < n) {
    const std::uint8_t lead = input[i];
    if (lead < 0x80) {  // one byte, U+0000..U+007F
      ++i;
      continue;
    }
    if (lead < 0xC0) return verdict::fail(i, error_kind::too_long);
    if (lead >= 0xF8) return verdict::fail(i, error_kind::header_bits);
    const unsigned len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : 2;

    // Structure first: the announced number of continuation bytes must be
    // present, whatever value they would encode.
    std::uint32_t cp = lead & (0x7Fu >> len);
    for (unsigned k = 1; k < len; ++k) {
      if (i + k >= n) return verdict::fail(i, error_kind::too_short);
      const std::uint8_t c = input[i + k];
      if ((c & 0xC0) != 0x80) return verdict::fail(i, error_kind::too_short);
      cp = (cp << 6) | (c & 0x3F);
    }

    // Range rules, in fixed order: shortest form, then the U+10FFFF cap,
    // then the surrogate block.
    static constexpr std::uint32_t min_for_len[5] = {0, 0, 0x80, 0x800,
                                                     0x10000};
    if (cp < min_for_len[len]) return verdict::fail(i, error_kind::overlong);
    if (cp > 0x10FFFF) return verdict::fail(i, error_kind::too_large);
    if (cp >= 0xD800 && cp <= 0xDFFF)
      return verdict::fail(i, error_kind::surrogate);
    i += len;
  }
  return verdict::ok();
}

encoded_char encode_code_point(std::uint32_t cp) {
  if (cp > 0x1FFFFF)
    throw std::out_of_range("code point does not fit four bytes");
  encoded_char e;
  if (cp <= 0x7F) {
    e.bytes[0] = static_cast<std::uint8_t>(cp);
    e.size = 1;
  } else if (cp <= 0x7FF) {
    e.bytes[0] = static_cast<std::uint8_t>(0xC0 | (cp >> 6));
    e.bytes[1] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
    e.size = 2;
  } else if (cp <= 0xFFFF) {
    e.bytes[0] = static_cast<std::uint8_t>(0xE0 | (cp >> 12));
    e.bytes[1] = static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F));
    e.bytes[2] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
    e.size = 3;
  } else {
    e.bytes[0] = static_cast<std::uint8_t>(0xF0 | (cp >> 18));
    e.bytes[1] = static_cast<std::uint8_t>(0x80 | ((cp >> 12) & 0x3F));
    e.bytes[2] = static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F));
    e.bytes[3] = static_cast<std::uint8_t>(0x80 | (cp & 0x3F));
    e.size = 4;
  }
  return e;
}

}  // namespace utf8v
