// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <cstddef>

namespace utf8v {

// Contract for the fixed-width unsigned-byte vector the lookup kernels are
// written against. Implementations exist for plain arrays (below), SSSE3 and
// AVX2; all must produce bit-identical lanes so that any backend can stand in
// for any other. Width is 16, 32, or 64.
//
//   load / splat / zero      construction; store writes the lanes back out
//   prev<N>                  lane i takes the byte N positions back, pulling
//                            the first N lanes from the previous vector
//   shift_right<N>           lane-wise logical shift
//   lookup16                 16-entry table lookup; caller guarantees every
//                            lane is below 0x10
//   & | ^ and_not            bitwise, with vector or splat right-hand side
//   saturating_sub           lane-wise max(lane - v, 0)
//   unsigned_max             lane-wise unsigned maximum
//   is_all_ascii             no lane has its top bit set
//   any_nonzero              at least one lane is nonzero
template <typename V>
concept byte_vector = requires(V v, const std::uint8_t* p, std::uint8_t* q,
                               const std::array<std::uint8_t, 16>& t) {
  { V::width } -> std::convertible_to<std::size_t>;
  { V::load(p) } -> std::same_as<V>;
  { V::splat(std::uint8_t{}) } -> std::same_as<V>;
  { V::zero() } -> std::same_as<V>;
  { v.store(q) } -> std::same_as<void>;
  { v.template prev<1>(v) } -> std::same_as<V>;
  { v.template shift_right<4>() } -> std::same_as<V>;
  { v.lookup16(t) } -> std::same_as<V>;
  { v & v } -> std::same_as<V>;
  { v | v } -> std::same_as<V>;
  { v ^ v } -> std::same_as<V>;
  { v.and_not(v) } -> std::same_as<V>;
  { v.saturating_sub(std::uint8_t{}) } -> std::same_as<V>;
  { v.unsigned_max(v) } -> std::same_as<V>;
  { v.is_all_ascii() } -> std::same_as<bool>;
  { v.any_nonzero() } -> std::same_as<bool>;
};

// Reference implementation: sixteen plain bytes. This is the portable
// fallback shipped on every target and the semantics the hardware backends
// are tested against.
struct vec16_scalar {
  static constexpr std::size_t width = 16;
  std::array<std::uint8_t, 16> lane{};

  static vec16_scalar load(const std::uint8_t* p) {
    vec16_scalar v;
    for (std::size_t i = 0; i < width; ++i) v.lane[i] = p[i];
    return v;
  }
  static vec16_scalar splat(std::uint8_t x) {
    vec16_scalar v;
    v.lane.fill(x);
    return v;
  }
  static vec16_scalar zero() { return {}; }

  void store(std::uint8_t* p) const {
    for (std::size_t i = 0; i < width; ++i) p[i] = lane[i];
  }

  template <int N>
  vec16_scalar prev(const vec16_scalar& previous) const {
    static_assert(N >= 1 && N <= 3);
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i)
      r.lane[i] = i >= static_cast<std::size_t>(N)
                      ? lane[i - N]
                      : previous.lane[width - N + i];
    return r;
  }

  template <int N>
  vec16_scalar shift_right() const {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i)
      r.lane[i] = static_cast<std::uint8_t>(lane[i] >> N);
    return r;
  }

  vec16_scalar lookup16(const std::array<std::uint8_t, 16>& table) const {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i) r.lane[i] = table[lane[i]];
    return r;
  }

  friend vec16_scalar operator&(const vec16_scalar& a, const vec16_scalar& b) {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i) r.lane[i] = a.lane[i] & b.lane[i];
    return r;
  }
  friend vec16_scalar operator|(const vec16_scalar& a, const vec16_scalar& b) {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i) r.lane[i] = a.lane[i] | b.lane[i];
    return r;
  }
  friend vec16_scalar operator^(const vec16_scalar& a, const vec16_scalar& b) {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i) r.lane[i] = a.lane[i] ^ b.lane[i];
    return r;
  }
  friend vec16_scalar operator&(const vec16_scalar& a, std::uint8_t b) {
    return a & splat(b);
  }
  friend vec16_scalar operator|(const vec16_scalar& a, std::uint8_t b) {
    return a | splat(b);
  }
  friend vec16_scalar operator^(const vec16_scalar& a, std::uint8_t b) {
    return a ^ splat(b);
  }

  vec16_scalar and_not(const vec16_scalar& b) const {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i)
      r.lane[i] = lane[i] & static_cast<std::uint8_t>(~b.lane[i]);
    return r;
  }

  vec16_scalar saturating_sub(std::uint8_t x) const {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i)
      r.lane[i] = lane[i] > x ? static_cast<std::uint8_t>(lane[i] - x) : 0;
    return r;
  }

  vec16_scalar unsigned_max(const vec16_scalar& b) const {
    vec16_scalar r;
    for (std::size_t i = 0; i < width; ++i)
      r.lane[i] = lane[i] > b.lane[i] ? lane[i] : b.lane[i];
    return r;
  }

  bool is_all_ascii() const {
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < width; ++i) acc |= lane[i];
    return (acc & 0x80) == 0;
  }

  bool any_nonzero() const {
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < width; ++i) acc |= lane[i];
    return acc != 0;
  }
};

static_assert(byte_vector<vec16_scalar>);

}  // namespace utf8v
