// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "utf8v/tables.hpp"
#include "utf8v/verdict.hpp"

namespace utf8v {

constexpr byte_class byte_class_of(std::uint8_t b) {
  return static_cast<byte_class>(k_fsm_tables.class_of[b]);
}

// Folds the transition table over the input, one step per byte, no branches
// on byte values. The error state is absorbing, so a final state of `valid`
// means the sequence is complete well-formed text; any countdown state means
// it ended inside a character. Because the fold is associative, a stream can
// be validated in segments by threading the returned state into `start`.
fsm_state validate_fsm(bytes_view input, fsm_state start = fsm_state::valid);

// Splits the input into three regions, each beginning on a non-continuation
// byte, and steps three independent state machines in one interleaved loop to
// break the per-byte dependency chain. Inputs under 32 bytes fall back to the
// plain fold. Region starts are found by scanning at most 3 bytes forward
// from the thirds; four continuation bytes in a row there decide the input
// invalid outright, since no well-formed text contains such a run.
bool validate_fsm_interleaved(bytes_view input);

}  // namespace utf8v
