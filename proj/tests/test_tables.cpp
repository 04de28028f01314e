// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/tables.hpp"

#include <doctest.h>

#include <array>
#include <string>

using namespace utf8v;

namespace {

// AND of the three nibble lookups for one byte pair, straight off the
// generated tables.
std::uint8_t classify_pair(std::uint8_t b1, std::uint8_t b2) {
  return static_cast<std::uint8_t>(k_nibble_tables.table1[b1 >> 4] &
                                   k_nibble_tables.table2[b1 & 0x0F] &
                                   k_nibble_tables.table3[b2 >> 4]);
}

}  // namespace

TEST_CASE("generated nibble tables hold the expected constants") {
  const std::array<std::uint8_t, 16> table1 = {
      0x02, 0x02, 0x02, 0x02, 0x02, 0x02, 0x02, 0x02,
      0x80, 0x80, 0x80, 0x80, 0x21, 0x01, 0x15, 0x49};
  const std::array<std::uint8_t, 16> table2 = {
      0xE7, 0xA3, 0x83, 0x83, 0x8B, 0xCB, 0xCB, 0xCB,
      0xCB, 0xCB, 0xCB, 0xCB, 0xCB, 0xDB, 0xCB, 0xCB};
  const std::array<std::uint8_t, 16> table3 = {
      0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01,
      0xE6, 0xAE, 0xBA, 0xBA, 0x01, 0x01, 0x01, 0x01};
  CHECK(k_nibble_tables.table1 == table1);
  CHECK(k_nibble_tables.table2 == table2);
  CHECK(k_nibble_tables.table3 == table3);
}

TEST_CASE("single pairs classify to the documented bits") {
  // C0 80: an overlong two-byte form and nothing else.
  CHECK(classify_pair(0xC0, 0x80) == 0x20);
  // 39 80: continuation after ASCII, the too-long bit.
  CHECK(classify_pair(0x39, 0x80) == 0x02);
  // ED A0: surrogate lead-in.
  CHECK(classify_pair(0xED, 0xA0) == 0x10);
  // F4 90: past U+10FFFF.
  CHECK(classify_pair(0xF4, 0x90) == 0x08);
  // C3 39: lead byte without its continuation.
  CHECK(classify_pair(0xC3, 0x39) == 0x01);
  // 80 80: adjacent continuations set only the informational bit 7.
  CHECK(classify_pair(0x80, 0x80) == 0x80);
  // E5 A0 and C3 A7 appear in well-formed text: nothing fires.
  CHECK(classify_pair(0xE5, 0xA0) == 0x00);
  CHECK(classify_pair(0xC3, 0xA7) == 0x00);
}

TEST_CASE("all 65,536 pairs match the independent pair predicate") {
  pair_check_failure failure{};
  const bool ok = verify_nibble_tables(k_nibble_tables, &failure);
  if (!ok) {
    // Surface the offending pair in the assertion message.
    CAPTURE(failure.byte1);
    CAPTURE(failure.byte2);
    CAPTURE(failure.classified);
  }
  REQUIRE(ok);
}

TEST_CASE("a corrupted table is caught by verification") {
  nibble_tables broken = k_nibble_tables;
  broken.table3[0x8] ^= 0x01;
  pair_check_failure failure{};
  CHECK_FALSE(verify_nibble_tables(broken, &failure));
}

TEST_CASE("worked classification example, lane by lane") {
  const std::array<std::uint8_t, 11> input = {0x39, 0xC3, 0xA7, 0xE9, 0x8F, 0xA1,
                                              0xF0, 0x9F, 0x98, 0x80, 0x00};
  const std::array<std::uint8_t, 11> byte_1_high = {0x02, 0x02, 0x21, 0x80,
                                                    0x15, 0x80, 0x80, 0x49,
                                                    0x80, 0x80, 0x80};
  const std::array<std::uint8_t, 11> byte_1_low = {0xE7, 0xCB, 0x83, 0xCB,
                                                   0xCB, 0xCB, 0xA3, 0xE7,
                                                   0xCB, 0xCB, 0xE7};
  const std::array<std::uint8_t, 11> byte_2_high = {0x01, 0x01, 0xBA, 0x01,
                                                    0xE6, 0xBA, 0x01, 0xAE,
                                                    0xAE, 0xE6, 0x01};
  const std::array<std::uint8_t, 11> final_row = {0x00, 0x00, 0x00, 0x00,
                                                  0x00, 0x80, 0x00, 0x00,
                                                  0x80, 0x80, 0x00};
  for (std::size_t i = 0; i < input.size(); ++i) {
    const std::uint8_t prev1 = i == 0 ? 0x00 : input[i - 1];
    const std::uint8_t high = k_nibble_tables.table1[prev1 >> 4];
    const std::uint8_t low = k_nibble_tables.table2[prev1 & 0x0F];
    const std::uint8_t cur = k_nibble_tables.table3[input[i] >> 4];
    CAPTURE(i);
    CHECK(high == byte_1_high[i]);
    CHECK(low == byte_1_low[i]);
    CHECK(cur == byte_2_high[i]);
    CHECK(static_cast<std::uint8_t>(high & low & cur) == final_row[i]);
  }
}

TEST_CASE("byte classes partition all 256 values as documented") {
  for (unsigned b = 0; b < 256; ++b)
    CHECK(k_fsm_tables.class_of[b] < k_num_byte_classes);
}

TEST_CASE("byte class spot checks at every range edge") {
  const auto cls = [](int b) {
    return static_cast<byte_class>(k_fsm_tables.class_of[b]);
  };
  CHECK(cls(0x00) == byte_class::ascii);
  CHECK(cls(0x7F) == byte_class::ascii);
  CHECK(cls(0x80) == byte_class::continuation_low);
  CHECK(cls(0x8F) == byte_class::continuation_low);
  CHECK(cls(0x90) == byte_class::continuation);
  CHECK(cls(0x9F) == byte_class::continuation);
  CHECK(cls(0xA0) == byte_class::continuation_high);
  CHECK(cls(0xBF) == byte_class::continuation_high);
  CHECK(cls(0xC0) == byte_class::illegal);
  CHECK(cls(0xC1) == byte_class::illegal);
  CHECK(cls(0xC2) == byte_class::lead2);
  CHECK(cls(0xDF) == byte_class::lead2);
  CHECK(cls(0xE0) == byte_class::lead3_overlong);
  CHECK(cls(0xE1) == byte_class::lead3_normal);
  CHECK(cls(0xEC) == byte_class::lead3_normal);
  CHECK(cls(0xED) == byte_class::lead3_surrogate);
  CHECK(cls(0xEE) == byte_class::lead3_normal);
  CHECK(cls(0xEF) == byte_class::lead3_normal);
  CHECK(cls(0xF0) == byte_class::lead4_overlong);
  CHECK(cls(0xF1) == byte_class::lead4_normal);
  CHECK(cls(0xF3) == byte_class::lead4_normal);
  CHECK(cls(0xF4) == byte_class::lead4_too_large);
  CHECK(cls(0xF5) == byte_class::illegal);
  CHECK(cls(0xFF) == byte_class::illegal);
}

TEST_CASE("the full transition grid matches an independently written copy") {
  // Rows in state order, columns in class order (continuation_low,
  // continuation, continuation_high, ascii, lead2, lead3_normal,
  // lead4_normal, lead3_overlong, lead3_surrogate, lead4_overlong,
  // lead4_too_large, illegal). Values are the state codes.
  const std::uint8_t expected[9][12] = {
      // valid
      {96, 96, 96, 0, 12, 24, 36, 48, 60, 72, 84, 96},
      // one_more
      {0, 0, 0, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // two_more
      {12, 12, 12, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // three_more
      {24, 24, 24, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // three_byte_overlong: only A0..BF may follow E0
      {96, 96, 12, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // three_byte_surrogate: only 80..9F may follow ED
      {12, 12, 96, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // four_byte_overlong: only 90..BF may follow F0
      {96, 24, 24, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // four_byte_too_large: only 80..8F may follow F4
      {24, 96, 96, 96, 96, 96, 96, 96, 96, 96, 96, 96},
      // error is absorbing
      {96, 96, 96, 96, 96, 96, 96, 96, 96, 96, 96, 96},
  };
  for (unsigned row = 0; row < k_num_fsm_states; ++row)
    for (unsigned col = 0; col < k_num_byte_classes; ++col) {
      CAPTURE(row);
      CAPTURE(col);
      CHECK(k_fsm_tables.next[row * k_num_byte_classes + col] ==
            expected[row][col]);
    }
}

TEST_CASE("table dump carries every table in hex") {
  const std::string dump = dump_tables();
  CHECK(dump.find("table1") != std::string::npos);
  CHECK(dump.find("table2") != std::string::npos);
  CHECK(dump.find("table3") != std::string::npos);
  CHECK(dump.find("byte classes") != std::string::npos);
  CHECK(dump.find("transitions") != std::string::npos);
  // A few recognizable constants.
  CHECK(dump.find("49") != std::string::npos);
  CHECK(dump.find("E7") != std::string::npos);
}
