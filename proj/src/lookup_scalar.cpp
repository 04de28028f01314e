// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lookup_backend_detail.hpp"

namespace utf8v::detail {

const lookup_backend& scalar_backend() {
  static constexpr lookup_backend backend = make_backend<vec16_scalar>("scalar");
  return backend;
}

}  // namespace utf8v::detail
