// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 and nothing wider; callers reach this backend only
// through the function pointers handed out after CPU detection.
#include "lookup_backend_detail.hpp"

#if defined(UTF8V_X86)

#include <immintrin.h>

namespace utf8v::detail {
namespace {

struct vec32_avx2 {
  static constexpr std::size_t width = 32;
  __m256i raw;

  static vec32_avx2 load(const std::uint8_t* p) {
    return {_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p))};
  }
  static vec32_avx2 splat(std::uint8_t x) {
    return {_mm256_set1_epi8(static_cast<char>(x))};
  }
  static vec32_avx2 zero() { return {_mm256_setzero_si256()}; }

  void store(std::uint8_t* p) const {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), raw);
  }

  // VPALIGNR shifts within each 128-bit half, so feed it the pair
  // [previous.high, current.low] as the low-side operand: each half then
  // borrows its leading bytes from the 16 bytes that truly precede it.
  template <int N>
  vec32_avx2 prev(const vec32_avx2& previous) const {
    static_assert(N >= 1 && N <= 3);
    const __m256i straddle =
        _mm256_permute2x128_si256(previous.raw, raw, 0x21);
    return {_mm256_alignr_epi8(raw, straddle, 16 - N)};
  }

  template <int N>
  vec32_avx2 shift_right() const {
    return {_mm256_and_si256(_mm256_srli_epi16(raw, N),
                             _mm256_set1_epi8(static_cast<char>(0xFFu >> N)))};
  }

  vec32_avx2 lookup16(const std::array<std::uint8_t, 16>& table) const {
    const __m128i t =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(table.data()));
    return {_mm256_shuffle_epi8(_mm256_broadcastsi128_si256(t), raw)};
  }

  friend vec32_avx2 operator&(const vec32_avx2& a, const vec32_avx2& b) {
    return {_mm256_and_si256(a.raw, b.raw)};
  }
  friend vec32_avx2 operator|(const vec32_avx2& a, const vec32_avx2& b) {
    return {_mm256_or_si256(a.raw, b.raw)};
  }
  friend vec32_avx2 operator^(const vec32_avx2& a, const vec32_avx2& b) {
    return {_mm256_xor_si256(a.raw, b.raw)};
  }
  friend vec32_avx2 operator&(const vec32_avx2& a, std::uint8_t b) {
    return a & splat(b);
  }
  friend vec32_avx2 operator|(const vec32_avx2& a, std::uint8_t b) {
    return a | splat(b);
  }
  friend vec32_avx2 operator^(const vec32_avx2& a, std::uint8_t b) {
    return a ^ splat(b);
  }

  vec32_avx2 and_not(const vec32_avx2& b) const {
    return {_mm256_andnot_si256(b.raw, raw)};
  }

  vec32_avx2 saturating_sub(std::uint8_t x) const {
    return {_mm256_subs_epu8(raw, _mm256_set1_epi8(static_cast<char>(x)))};
  }

  vec32_avx2 unsigned_max(const vec32_avx2& b) const {
    return {_mm256_max_epu8(raw, b.raw)};
  }

  bool is_all_ascii() const { return _mm256_movemask_epi8(raw) == 0; }

  bool any_nonzero() const { return !_mm256_testz_si256(raw, raw); }
};

static_assert(byte_vector<vec32_avx2>);

}  // namespace

const lookup_backend& avx2_backend() {
  static constexpr lookup_backend backend = make_backend<vec32_avx2>("avx2");
  return backend;
}

}  // namespace utf8v::detail

#endif  // UTF8V_X86
