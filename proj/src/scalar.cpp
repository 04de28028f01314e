// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/scalar.hpp"

#include <cstdint>
#include <cstring>

namespace utf8v {
namespace {

constexpr std::uint64_t k_high_bits = 0x8080808080808080ull;

inline std::uint64_t load64(const std::uint8_t* p) {
  std::uint64_t w;
  std::memcpy(&w, p, sizeof w);  // byte order is irrelevant under a
  return w;                      // symmetric mask
}

inline bool is_continuation(std::uint8_t b) { return (b & 0xC0) == 0x80; }

template <bool AsciiFastPath>
verdict validate_impl(bytes_view input, std::size_t* ascii_blocks) {
  const std::uint8_t* const p = input.data();
  const std::size_t n = input.size();
  std::size_t i = 0;
  while (i < n) {
    if constexpr (AsciiFastPath) {
      while (n - i >= 16 &&
             ((load64(p + i) | load64(p + i + 8)) & k_high_bits) == 0) {
        i += 16;
        if (ascii_blocks) ++*ascii_blocks;
      }
      if (i >= n) break;
    }
    const std::uint8_t b = p[i];
    if (b < 0x80) {
      ++i;
    } else if (b >= 0xC0 && b <= 0xDF) {  // two-byte leads
      if (n - i < 2 || !is_continuation(p[i + 1]))
        return verdict::fail(i, error_kind::too_short);
      if (b <= 0xC1) return verdict::fail(i, error_kind::overlong);
      i += 2;
    } else if (b == 0xE0) {  // U+0800..U+0FFF; second byte A0..BF
      if (n - i < 3 || !is_continuation(p[i + 1]) || !is_continuation(p[i + 2]))
        return verdict::fail(i, error_kind::too_short);
      if (p[i + 1] <= 0x9F) return verdict::fail(i, error_kind::overlong);
      i += 3;
    } else if (b == 0xED) {  // U+D000..U+D7FF; second byte 80..9F
      if (n - i < 3 || !is_continuation(p[i + 1]) || !is_continuation(p[i + 2]))
        return verdict::fail(i, error_kind::too_short);
      if (p[i + 1] >= 0xA0) return verdict::fail(i, error_kind::surrogate);
      i += 3;
    } else if (b >= 0xE1 && b <= 0xEF) {  // remaining three-byte leads
      if (n - i < 3 || !is_continuation(p[i + 1]) || !is_continuation(p[i + 2]))
        return verdict::fail(i, error_kind::too_short);
      i += 3;
    } else if (b == 0xF0) {  // U+10000..U+3FFFF; second byte 90..BF
      if (n - i < 4 || !is_continuation(p[i + 1]) ||
          !is_continuation(p[i + 2]) || !is_continuation(p[i + 3]))
        return verdict::fail(i, error_kind::too_short);
      if (p[i + 1] <= 0x8F) return verdict::fail(i, error_kind::overlong);
      i += 4;
    } else if (b >= 0xF1 && b <= 0xF3) {
      if (n - i < 4 || !is_continuation(p[i + 1]) ||
          !is_continuation(p[i + 2]) || !is_continuation(p[i + 3]))
        return verdict::fail(i, error_kind::too_short);
      i += 4;
    } else if (b == 0xF4) {  // U+100000..U+10FFFF; second byte 80..8F
      if (n - i < 4 || !is_continuation(p[i + 1]) ||
          !is_continuation(p[i + 2]) || !is_continuation(p[i + 3]))
        return verdict::fail(i, error_kind::too_short);
      if (p[i + 1] >= 0x90) return verdict::fail(i, error_kind::too_large);
      i += 4;
    } else if (b >= 0xF5 && b <= 0xF7) {  // all encodings land above U+10FFFF
      if (n - i < 4 || !is_continuation(p[i + 1]) ||
          !is_continuation(p[i + 2]) || !is_continuation(p[i + 3]))
        return verdict::fail(i, error_kind::too_short);
      return verdict::fail(i, error_kind::too_large);
    } else if (b < 0xC0) {  // stray continuation
      return verdict::fail(i, error_kind::too_long);
    } else {  // F8..FF
      return verdict::fail(i, error_kind::header_bits);
    }
  }
  return verdict::ok();
}

}  // namespace

verdict validate_branchy(bytes_view input) {
  return validate_impl<false>(input, nullptr);
}

verdict validate_branchy_ascii(bytes_view input, std::size_t* ascii_blocks) {
  return validate_impl<true>(input, ascii_blocks);
}

}  // namespace utf8v
