// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "utf8v/verdict.hpp"

namespace utf8v {

// ---------------------------------------------------------------------------
// Nibble tables for vectorized two-byte classification.
//
// Every malformed UTF-8 sequence except a missing 2nd/3rd continuation of a
// 3/4-byte character is recognizable from two consecutive bytes, and each of
// those two-byte errors is recognizable from just the first byte plus the
// high nibble of the second. The classifier therefore takes three 16-entry
// lookups — on the high nibble of byte 1, the low nibble of byte 1, and the
// high nibble of byte 2 — and ANDs the results. A bit survives the AND only
// if all three nibbles lie inside that bit's pattern:
//
//   bit 0  too-short       byte 1 = C0..FF        byte 2 = 00..7F or C0..FF
//   bit 1  too-long        byte 1 = 00..7F        byte 2 = 80..BF
//   bit 2  overlong-3      byte 1 = E0, low 0     byte 2 = 80..9F
//   bit 3  too-large       byte 1 = F4..FF        byte 2 = 90..BF
//   bit 4  surrogate       byte 1 = ED            byte 2 = A0..BF
//   bit 5  overlong-2      byte 1 = C0..C1        byte 2 = 80..BF
//   bit 6  overlong-4 and  byte 1 = F0 or F5..FF  byte 2 = 80..8F
//          5+-byte leads
//   bit 7  two continuations (not an error by itself; consumed by the
//          3/4-byte length check)
//
// Bits 0..6 never fire on a byte pair that can appear inside well-formed
// text; verify_nibble_tables() proves that against an independent encoding
// of the invalid-pair list, for all 65,536 pairs.
// ---------------------------------------------------------------------------

struct error_pattern {
  std::uint8_t bit;
  std::uint16_t byte1_high;  // bitmask over nibble values 0..15
  std::uint16_t byte1_low;
  std::uint16_t byte2_high;
  const char* name;
};

namespace detail {
// Mask with bits lo..hi set, e.g. nibbles(0x8, 0xB) = 0x0F00.
constexpr std::uint16_t nibbles(unsigned lo, unsigned hi) {
  std::uint16_t m = 0;
  for (unsigned v = lo; v <= hi; ++v) m = static_cast<std::uint16_t>(m | (1u << v));
  return m;
}
inline constexpr std::uint16_t all_nibbles = 0xFFFF;
}  // namespace detail

inline constexpr std::array<error_pattern, 8> k_error_patterns = {{
    {0, detail::nibbles(0xC, 0xF), detail::all_nibbles,
     static_cast<std::uint16_t>(detail::nibbles(0x0, 0x7) | detail::nibbles(0xC, 0xF)),
     "too-short"},
    {1, detail::nibbles(0x0, 0x7), detail::all_nibbles, detail::nibbles(0x8, 0xB),
     "too-long"},
    {2, detail::nibbles(0xE, 0xE), detail::nibbles(0x0, 0x0), detail::nibbles(0x8, 0x9),
     "overlong-3"},
    {3, detail::nibbles(0xF, 0xF), detail::nibbles(0x4, 0xF), detail::nibbles(0x9, 0xB),
     "too-large"},
    {4, detail::nibbles(0xE, 0xE), detail::nibbles(0xD, 0xD), detail::nibbles(0xA, 0xB),
     "surrogate"},
    {5, detail::nibbles(0xC, 0xC), detail::nibbles(0x0, 0x1), detail::nibbles(0x8, 0xB),
     "overlong-2"},
    {6, detail::nibbles(0xF, 0xF),
     static_cast<std::uint16_t>(detail::nibbles(0x0, 0x0) | detail::nibbles(0x5, 0xF)),
     detail::nibbles(0x8, 0x8), "overlong-4"},
    {7, detail::nibbles(0x8, 0xB), detail::all_nibbles, detail::nibbles(0x8, 0xB),
     "two-continuations"},
}};

struct nibble_tables {
  std::array<std::uint8_t, 16> table1{};  // indexed by high nibble of byte 1
  std::array<std::uint8_t, 16> table2{};  // indexed by low nibble of byte 1
  std::array<std::uint8_t, 16> table3{};  // indexed by high nibble of byte 2
};

constexpr nibble_tables build_nibble_tables() {
  nibble_tables t;
  for (const error_pattern& p : k_error_patterns) {
    for (unsigned n = 0; n < 16; ++n) {
      if (p.byte1_high & (1u << n)) t.table1[n] |= static_cast<std::uint8_t>(1u << p.bit);
      if (p.byte1_low & (1u << n)) t.table2[n] |= static_cast<std::uint8_t>(1u << p.bit);
      if (p.byte2_high & (1u << n)) t.table3[n] |= static_cast<std::uint8_t>(1u << p.bit);
    }
  }
  return t;
}

inline constexpr nibble_tables k_nibble_tables = build_nibble_tables();

// True when the two bytes can never be adjacent in well-formed UTF-8 at any
// position. Deliberately written as plain range comparisons, independent of
// the nibble machinery it is used to audit.
constexpr bool pair_always_invalid(std::uint8_t b1, std::uint8_t b2) {
  const bool cont2 = (b2 & 0xC0) == 0x80;
  // overlong two-byte form: C0..C1 encode values below U+0080
  if ((b1 == 0xC0 || b1 == 0xC1) && cont2) return true;
  // overlong three-byte form: E0 requires A0..BF
  if (b1 == 0xE0 && b2 >= 0x80 && b2 <= 0x9F) return true;
  // overlong four-byte form: F0 requires 90..BF
  if (b1 == 0xF0 && b2 >= 0x80 && b2 <= 0x8F) return true;
  // leading byte without its continuation
  if (b1 >= 0xC0 && !cont2) return true;
  // continuation right after a one-byte character
  if (b1 <= 0x7F && cont2) return true;
  // surrogate block: ED A0..BF encodes U+D800..U+DFFF
  if (b1 == 0xED && b2 >= 0xA0 && b2 <= 0xBF) return true;
  // above U+10FFFF: F4 caps at 8F, and F5..F7 start nothing valid
  if (b1 == 0xF4 && b2 >= 0x90 && b2 <= 0xBF) return true;
  if (b1 >= 0xF5 && b1 <= 0xF7) return true;
  // five or more header bits
  if (b1 >= 0xF8) return true;
  return false;
}

struct pair_check_failure {
  std::uint8_t byte1;
  std::uint8_t byte2;
  std::uint8_t classified;  // AND of the three lookups
  bool expected_invalid;
  bool expected_both_continuations;
};

// Checks, for all 65,536 byte pairs, that the AND of the three lookups has a
// bit in 0..6 exactly when pair_always_invalid() says so, and bit 7 exactly
// when both bytes are continuations. Returns false and fills *failure (when
// given) with the first offending pair.
bool verify_nibble_tables(const nibble_tables& t,
                          pair_check_failure* failure = nullptr);

// ---------------------------------------------------------------------------
// Byte-class and transition tables for the table-driven validator.
//
// The 256 byte values partition into twelve classes; the machine has nine
// states, encoded as multiples of 12 so that state + class indexes a flat
// 108-entry transition table without further arithmetic.
// ---------------------------------------------------------------------------

enum class byte_class : std::uint8_t {
  continuation_low,   // 80..8F
  continuation,       // 90..9F
  continuation_high,  // A0..BF
  ascii,              // 00..7F
  lead2,              // C2..DF
  lead3_normal,       // E1..EC, EE..EF
  lead4_normal,       // F1..F3
  lead3_overlong,     // E0 (second byte must be A0..BF)
  lead3_surrogate,    // ED (second byte must be 80..9F)
  lead4_overlong,     // F0 (second byte must be 90..BF)
  lead4_too_large,    // F4 (second byte must be 80..8F)
  illegal,            // C0..C1, F5..FF
};

inline constexpr unsigned k_num_byte_classes = 12;

enum class fsm_state : std::uint8_t {
  valid = 0,
  one_more = 12,
  two_more = 24,
  three_more = 36,
  three_byte_overlong = 48,
  three_byte_surrogate = 60,
  four_byte_overlong = 72,
  four_byte_too_large = 84,
  error = 96,  // absorbing
};

inline constexpr unsigned k_num_fsm_states = 9;

struct fsm_tables {
  std::array<std::uint8_t, 256> class_of{};
  std::array<std::uint8_t, k_num_fsm_states * k_num_byte_classes> next{};
};

constexpr fsm_tables build_fsm_tables() {
  fsm_tables t;

  // Build the partition range by range; the sentinel pass below proves every
  // byte value was assigned exactly once.
  constexpr std::uint8_t unset = 0xFF;
  for (auto& c : t.class_of) c = unset;
  const auto assign = [&](unsigned lo, unsigned hi, byte_class c) {
    for (unsigned b = lo; b <= hi; ++b) {
      if (t.class_of[b] != unset) throw "byte assigned to two classes";
      t.class_of[b] = static_cast<std::uint8_t>(c);
    }
  };
  assign(0x00, 0x7F, byte_class::ascii);
  assign(0x80, 0x8F, byte_class::continuation_low);
  assign(0x90, 0x9F, byte_class::continuation);
  assign(0xA0, 0xBF, byte_class::continuation_high);
  assign(0xC0, 0xC1, byte_class::illegal);
  assign(0xC2, 0xDF, byte_class::lead2);
  assign(0xE0, 0xE0, byte_class::lead3_overlong);
  assign(0xE1, 0xEC, byte_class::lead3_normal);
  assign(0xED, 0xED, byte_class::lead3_surrogate);
  assign(0xEE, 0xEF, byte_class::lead3_normal);
  assign(0xF0, 0xF0, byte_class::lead4_overlong);
  assign(0xF1, 0xF3, byte_class::lead4_normal);
  assign(0xF4, 0xF4, byte_class::lead4_too_large);
  assign(0xF5, 0xFF, byte_class::illegal);
  for (auto c : t.class_of)
    if (c == unset) throw "byte assigned to no class";

  const auto entry = [&](fsm_state s, byte_class c) -> std::uint8_t& {
    return t.next[static_cast<unsigned>(s) + static_cast<unsigned>(c)];
  };
  const auto code = [](fsm_state s) { return static_cast<std::uint8_t>(s); };

  // Default everything to error, then carve out the legal moves.
  for (auto& e : t.next) e = code(fsm_state::error);

  // From valid, a byte opens a fresh character and its class names the
  // follow-up state.
  entry(fsm_state::valid, byte_class::ascii) = code(fsm_state::valid);
  entry(fsm_state::valid, byte_class::lead2) = code(fsm_state::one_more);
  entry(fsm_state::valid, byte_class::lead3_normal) = code(fsm_state::two_more);
  entry(fsm_state::valid, byte_class::lead4_normal) = code(fsm_state::three_more);
  entry(fsm_state::valid, byte_class::lead3_overlong) =
      code(fsm_state::three_byte_overlong);
  entry(fsm_state::valid, byte_class::lead3_surrogate) =
      code(fsm_state::three_byte_surrogate);
  entry(fsm_state::valid, byte_class::lead4_overlong) =
      code(fsm_state::four_byte_overlong);
  entry(fsm_state::valid, byte_class::lead4_too_large) =
      code(fsm_state::four_byte_too_large);

  // Plain continuation countdown.
  for (byte_class c : {byte_class::continuation_low, byte_class::continuation,
                       byte_class::continuation_high}) {
    entry(fsm_state::one_more, c) = code(fsm_state::valid);
    entry(fsm_state::two_more, c) = code(fsm_state::one_more);
    entry(fsm_state::three_more, c) = code(fsm_state::two_more);
  }

  // Constrained second bytes: E0 needs A0..BF, ED needs 80..9F, F0 needs
  // 90..BF, F4 needs 80..8F.
  entry(fsm_state::three_byte_overlong, byte_class::continuation_high) =
      code(fsm_state::one_more);
  entry(fsm_state::three_byte_surrogate, byte_class::continuation_low) =
      code(fsm_state::one_more);
  entry(fsm_state::three_byte_surrogate, byte_class::continuation) =
      code(fsm_state::one_more);
  entry(fsm_state::four_byte_overlong, byte_class::continuation) =
      code(fsm_state::two_more);
  entry(fsm_state::four_byte_overlong, byte_class::continuation_high) =
      code(fsm_state::two_more);
  entry(fsm_state::four_byte_too_large, byte_class::continuation_low) =
      code(fsm_state::two_more);

  return t;
}

inline constexpr fsm_tables k_fsm_tables = build_fsm_tables();

constexpr std::string_view to_string(fsm_state s) {
  switch (s) {
    case fsm_state::valid: return "valid";
    case fsm_state::one_more: return "1-more";
    case fsm_state::two_more: return "2-more";
    case fsm_state::three_more: return "3-more";
    case fsm_state::three_byte_overlong: return "3-byte-overlong";
    case fsm_state::three_byte_surrogate: return "3-byte-surrogate";
    case fsm_state::four_byte_overlong: return "4-byte-overlong";
    case fsm_state::four_byte_too_large: return "4-byte-too-large";
    case fsm_state::error: return "error";
  }
  return "unknown";
}

constexpr std::string_view to_string(byte_class c) {
  switch (c) {
    case byte_class::continuation_low: return "cont-low";
    case byte_class::continuation: return "cont";
    case byte_class::continuation_high: return "cont-high";
    case byte_class::ascii: return "ascii";
    case byte_class::lead2: return "lead2";
    case byte_class::lead3_normal: return "lead3";
    case byte_class::lead4_normal: return "lead4";
    case byte_class::lead3_overlong: return "lead3-e0";
    case byte_class::lead3_surrogate: return "lead3-ed";
    case byte_class::lead4_overlong: return "lead4-f0";
    case byte_class::lead4_too_large: return "lead4-f4";
    case byte_class::illegal: return "illegal";
  }
  return "unknown";
}

// Hex dump of all tables, the form printed by `utf8v tables --dump`.
std::string dump_tables();

}  // namespace utf8v
