// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mssse3 and nothing wider; callers reach this backend only
// through the function pointers handed out after CPU detection.
#include "lookup_backend_detail.hpp"

#if defined(UTF8V_X86)

#include <immintrin.h>

namespace utf8v::detail {
namespace {

struct vec16_ssse3 {
  static constexpr std::size_t width = 16;
  __m128i raw;

  static vec16_ssse3 load(const std::uint8_t* p) {
    return {_mm_loadu_si128(reinterpret_cast<const __m128i*>(p))};
  }
  static vec16_ssse3 splat(std::uint8_t x) {
    return {_mm_set1_epi8(static_cast<char>(x))};
  }
  static vec16_ssse3 zero() { return {_mm_setzero_si128()}; }

  void store(std::uint8_t* p) const {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(p), raw);
  }

  template <int N>
  vec16_ssse3 prev(const vec16_ssse3& previous) const {
    static_assert(N >= 1 && N <= 3);
    return {_mm_alignr_epi8(raw, previous.raw, 16 - N)};
  }

  // No byte-granular shift exists; shift 16-bit lanes and mask off the bits
  // that crossed in from the neighbor.
  template <int N>
  vec16_ssse3 shift_right() const {
    return {_mm_and_si128(_mm_srli_epi16(raw, N),
                          _mm_set1_epi8(static_cast<char>(0xFFu >> N)))};
  }

  vec16_ssse3 lookup16(const std::array<std::uint8_t, 16>& table) const {
    const __m128i t =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(table.data()));
    return {_mm_shuffle_epi8(t, raw)};
  }

  friend vec16_ssse3 operator&(const vec16_ssse3& a, const vec16_ssse3& b) {
    return {_mm_and_si128(a.raw, b.raw)};
  }
  friend vec16_ssse3 operator|(const vec16_ssse3& a, const vec16_ssse3& b) {
    return {_mm_or_si128(a.raw, b.raw)};
  }
  friend vec16_ssse3 operator^(const vec16_ssse3& a, const vec16_ssse3& b) {
    return {_mm_xor_si128(a.raw, b.raw)};
  }
  friend vec16_ssse3 operator&(const vec16_ssse3& a, std::uint8_t b) {
    return a & splat(b);
  }
  friend vec16_ssse3 operator|(const vec16_ssse3& a, std::uint8_t b) {
    return a | splat(b);
  }
  friend vec16_ssse3 operator^(const vec16_ssse3& a, std::uint8_t b) {
    return a ^ splat(b);
  }

  vec16_ssse3 and_not(const vec16_ssse3& b) const {
    return {_mm_andnot_si128(b.raw, raw)};
  }

  vec16_ssse3 saturating_sub(std::uint8_t x) const {
    return {_mm_subs_epu8(raw, _mm_set1_epi8(static_cast<char>(x)))};
  }

  vec16_ssse3 unsigned_max(const vec16_ssse3& b) const {
    return {_mm_max_epu8(raw, b.raw)};
  }

  bool is_all_ascii() const { return _mm_movemask_epi8(raw) == 0; }

  bool any_nonzero() const {
    return _mm_movemask_epi8(_mm_cmpeq_epi8(raw, _mm_setzero_si128())) !=
           0xFFFF;
  }
};

static_assert(byte_vector<vec16_ssse3>);

}  // namespace

const lookup_backend& ssse3_backend() {
  static constexpr lookup_backend backend = make_backend<vec16_ssse3>("ssse3");
  return backend;
}

}  // namespace utf8v::detail

#endif  // UTF8V_X86
