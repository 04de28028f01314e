// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/tables.hpp"

#include <cassert>
#include <cstdio>

namespace utf8v {

bool verify_nibble_tables(const nibble_tables& t, pair_check_failure* failure) {
  for (unsigned b1 = 0; b1 < 256; ++b1) {
    for (unsigned b2 = 0; b2 < 256; ++b2) {
      const std::uint8_t classified = static_cast<std::uint8_t>(
          t.table1[b1 >> 4] & t.table2[b1 & 0x0F] & t.table3[b2 >> 4]);
      const bool expect_invalid = pair_always_invalid(
          static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2));
      const bool expect_pair =
          (b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80;
      const bool got_invalid = (classified & 0x7F) != 0;
      const bool got_pair = (classified & 0x80) != 0;
      if (got_invalid != expect_invalid || got_pair != expect_pair) {
        if (failure) {
          *failure = {static_cast<std::uint8_t>(b1),
                      static_cast<std::uint8_t>(b2), classified,
                      expect_invalid, expect_pair};
        }
        return false;
      }
    }
  }
  return true;
}

namespace {

#ifndef NDEBUG
// Debug builds re-audit the compile-time tables once at startup.
const bool k_tables_audited = [] {
  assert(verify_nibble_tables(k_nibble_tables));
  return true;
}();
#endif

void append_nibble_row(std::string& out, const char* label,
                       const std::array<std::uint8_t, 16>& row) {
  char buf[8];
  out += label;
  for (std::uint8_t v : row) {
    std::snprintf(buf, sizeof buf, " %02X", v);
    out += buf;
  }
  out += '\n';
}

}  // namespace

std::string dump_tables() {
  std::string out;
  char buf[32];

  append_nibble_row(out, "table1 (byte1 high nibble):", k_nibble_tables.table1);
  append_nibble_row(out, "table2 (byte1 low nibble): ", k_nibble_tables.table2);
  append_nibble_row(out, "table3 (byte2 high nibble):", k_nibble_tables.table3);

  out += "\nbyte classes (16 per row):\n";
  for (unsigned b = 0; b < 256; b += 16) {
    std::snprintf(buf, sizeof buf, "  %02X:", b);
    out += buf;
    for (unsigned k = 0; k < 16; ++k) {
      std::snprintf(buf, sizeof buf, " %2u", k_fsm_tables.class_of[b + k]);
      out += buf;
    }
    out += '\n';
  }

  out += "\ntransitions (state x class):\n";
  for (unsigned s = 0; s < k_num_fsm_states; ++s) {
    const auto state = static_cast<fsm_state>(s * k_num_byte_classes);
    std::snprintf(buf, sizeof buf, "  %-16s:", std::string(to_string(state)).c_str());
    out += buf;
    for (unsigned c = 0; c < k_num_byte_classes; ++c) {
      const auto nxt = static_cast<fsm_state>(
          k_fsm_tables.next[s * k_num_byte_classes + c]);
      std::snprintf(buf, sizeof buf, " %-16s", std::string(to_string(nxt)).c_str());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace utf8v
