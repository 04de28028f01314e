// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstring>

#include "utf8v/byte_vector.hpp"
#include "utf8v/tables.hpp"

namespace utf8v {

// Width-agnostic validation kernels. Instantiated once per byte_vector
// implementation; every instantiation computes identical lanes.

// Two-byte classification. Lane i looks at the byte pair ending at lane i
// (prev<1> supplies the byte before lane 0) and ANDs three nibble lookups.
// Bits 0..6 mark pairs that can never appear in well-formed text; bit 7
// marks two adjacent continuation bytes, which is only meaningful to
// check_multibyte_lengths below.
template <byte_vector V>
V classify(V input, V previous) {
  const V prev1 = input.template prev<1>(previous);
  const V byte_1_high =
      prev1.template shift_right<4>().lookup16(k_nibble_tables.table1);
  const V byte_1_low = (prev1 & std::uint8_t{0x0F}).lookup16(k_nibble_tables.table2);
  const V byte_2_high =
      input.template shift_right<4>().lookup16(k_nibble_tables.table3);
  return byte_1_high & byte_1_low & byte_2_high;
}

// 3/4-byte length check. A lane must be the second of two adjacent
// continuations exactly when the byte two back is a 3/4-byte lead (>= E0) or
// the byte three back is a 4-byte lead (>= F0). Saturating subtraction slides
// those thresholds onto the top bit, one OR merges them, and XOR against the
// classification's bit 7 flags a mismatch in either direction while passing
// bits 0..6 through untouched.
template <byte_vector V>
V check_multibyte_lengths(V input, V previous, V classified) {
  const V prev2 = input.template prev<2>(previous);
  const V prev3 = input.template prev<3>(previous);
  const V third = prev2.saturating_sub(std::uint8_t{0xE0 - 0x80});
  const V fourth = prev3.saturating_sub(std::uint8_t{0xF0 - 0x80});
  const V expect_continuation = (third | fourth) & std::uint8_t{0x80};
  return expect_continuation ^ classified;
}

namespace detail {
template <std::size_t W>
constexpr std::array<std::uint8_t, W> incomplete_limits() {
  std::array<std::uint8_t, W> a{};
  for (auto& v : a) v = 0xFF;
  a[W - 3] = 0xEF;  // a 4-byte lead here has fewer than 3 bytes after it
  a[W - 2] = 0xDF;  // a 3+-byte lead here has fewer than 2
  a[W - 1] = 0xBF;  // any lead here has none
  return a;
}
}  // namespace detail

// Nonzero where the vector ends inside a multi-byte character: one unsigned
// maximum against a constant that is 0xFF everywhere except the last three
// lanes, then an XOR that leaves exactly the exceeding lanes set.
template <byte_vector V>
V check_incomplete(V input) {
  static constexpr auto limits = detail::incomplete_limits<V::width>();
  const V max_value = V::load(limits.data());
  return input.unsigned_max(max_value) ^ max_value;
}

template <byte_vector V>
struct error_accumulator {
  V bits = V::zero();
  void merge(V v) { bits = bits | v; }
  bool clean() const { return !bits.any_nonzero(); }
};

// Streaming checker over 64-byte blocks. Errors accumulate by OR and are
// inspected once, by valid(); prev carries the last vector across block
// boundaries so pair and length checks see through them. A block of pure
// ASCII skips classification entirely, but must first cash in the pending
// incomplete check: the previous block had to end on a character boundary.
template <byte_vector V>
class lookup_checker {
 public:
  static constexpr std::size_t block_bytes = 64;

  void process_block(const std::uint8_t* block) {
    constexpr std::size_t vectors = block_bytes / V::width;
    V v[vectors];
    for (std::size_t i = 0; i < vectors; ++i)
      v[i] = V::load(block + i * V::width);
    V combined = v[0];
    for (std::size_t i = 1; i < vectors; ++i) combined = combined | v[i];
    if (combined.is_all_ascii()) {
      err_.merge(pending_);
      pending_ = V::zero();
    } else {
      for (std::size_t i = 0; i < vectors; ++i) {
        const V classified = classify(v[i], prev_);
        err_.merge(check_multibyte_lengths(v[i], prev_, classified));
        prev_ = v[i];
      }
      pending_ = check_incomplete(v[vectors - 1]);
      return;
    }
    prev_ = v[vectors - 1];
  }

  // Stream-final decision: the last block must also have ended on a
  // character boundary.
  bool valid() const { return err_.clean() && !pending_.any_nonzero(); }

 private:
  error_accumulator<V> err_;
  V prev_ = V::zero();
  V pending_ = V::zero();
};

// Whole-buffer entry point: full blocks in place, the remainder copied into
// a zeroed scratch block. Zero padding turns a trailing truncated character
// into a lead-then-ASCII pair, which the classifier flags on its own.
template <byte_vector V>
bool validate_with(const std::uint8_t* data, std::size_t size) {
  lookup_checker<V> checker;
  const std::size_t full = size - size % lookup_checker<V>::block_bytes;
  for (std::size_t i = 0; i < full; i += lookup_checker<V>::block_bytes)
    checker.process_block(data + i);
  if (size != full) {
    std::uint8_t tail[lookup_checker<V>::block_bytes] = {0};
    std::memcpy(tail, data + full, size - full);
    checker.process_block(tail);
  }
  return checker.valid();
}

// Exercises every contract operation against plain-array semantics computed
// in place; the hardware backends run this in their own translation units so
// a lane-order or shuffle mistake cannot hide behind matching verdicts.
template <byte_vector V>
bool vector_ops_self_test(std::uint64_t seed) {
  constexpr std::size_t w = V::width;
  std::uint64_t state = seed ? seed : 1;
  const auto next_byte = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<std::uint8_t>(state);
  };

  for (int round = 0; round < 64; ++round) {
    std::array<std::uint8_t, w> a{}, b{};
    for (auto& x : a) x = next_byte();
    for (auto& x : b) x = next_byte();
    std::array<std::uint8_t, 16> table{};
    for (auto& x : table) x = next_byte();
    const std::uint8_t s = next_byte();

    const V va = V::load(a.data());
    const V vb = V::load(b.data());

    // Expected lanes are computed with plain arithmetic; a result matches
    // when XOR against the expected load leaves nothing set.
    std::array<std::uint8_t, w> expect{};
    const auto check = [&](const V& got) {
      const V ve = V::load(expect.data());
      return !(got ^ ve).any_nonzero();
    };

    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] & b[i];
    if (!check(va & vb)) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] | b[i];
    if (!check(va | vb)) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] ^ b[i];
    if (!check(va ^ vb)) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] & ~b[i];
    if (!check(va.and_not(vb))) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] & s;
    if (!check(va & s)) return false;

    for (std::size_t i = 0; i < w; ++i) expect[i] = i >= 1 ? a[i - 1] : b[w - 1 + i];
    if (!check(va.template prev<1>(vb))) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = i >= 2 ? a[i - 2] : b[w - 2 + i];
    if (!check(va.template prev<2>(vb))) return false;
    for (std::size_t i = 0; i < w; ++i) expect[i] = i >= 3 ? a[i - 3] : b[w - 3 + i];
    if (!check(va.template prev<3>(vb))) return false;

    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] >> 4;
    if (!check(va.template shift_right<4>())) return false;

    std::array<std::uint8_t, w> nib{};
    for (std::size_t i = 0; i < w; ++i) nib[i] = a[i] & 0x0F;
    const V vnib = V::load(nib.data());
    for (std::size_t i = 0; i < w; ++i) expect[i] = table[nib[i]];
    if (!check(vnib.lookup16(table))) return false;

    for (std::size_t i = 0; i < w; ++i)
      expect[i] = a[i] > s ? static_cast<std::uint8_t>(a[i] - s) : 0;
    if (!check(va.saturating_sub(s))) return false;

    for (std::size_t i = 0; i < w; ++i) expect[i] = a[i] > b[i] ? a[i] : b[i];
    if (!check(va.unsigned_max(vb))) return false;

    bool all_ascii = true, nonzero = false;
    for (std::size_t i = 0; i < w; ++i) {
      all_ascii = all_ascii && a[i] < 0x80;
      nonzero = nonzero || a[i] != 0;
    }
    if (va.is_all_ascii() != all_ascii) return false;
    if (va.any_nonzero() != nonzero) return false;
    if (V::zero().any_nonzero()) return false;
    if (!V::splat(0x80).any_nonzero()) return false;
    if (V::splat(0x7F).is_all_ascii() != true) return false;
    if (V::splat(0x80).is_all_ascii() != false) return false;
  }
  return true;
}

}  // namespace utf8v
