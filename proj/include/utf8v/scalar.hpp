// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "utf8v/verdict.hpp"

namespace utf8v {

// Range-dispatch validator: one branch tree per character, keyed on the
// leading byte (ASCII; C2..DF; E0; ED; E1..EC and EE..EF; F0; F1..F3; F4;
// everything else fails immediately). Continuations are checked before the
// constrained-second-byte ranges, so a truncated character is always
// too-short rather than a range error, matching oracle_validate.
verdict validate_branchy(bytes_view input);

// Same dispatch, plus a fast path: whenever at least 16 bytes remain at a
// character boundary, two 8-byte words are ORed and tested against
// 0x8080808080808080; a zero result skips the whole 16-byte block. When
// ascii_blocks is non-null it is incremented once per skipped block.
verdict validate_branchy_ascii(bytes_view input,
                               std::size_t* ascii_blocks = nullptr);

}  // namespace utf8v
