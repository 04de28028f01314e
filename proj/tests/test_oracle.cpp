// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/oracle.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace utf8v;

namespace {

std::vector<std::uint8_t> bytes(std::initializer_list<int> xs) {
  std::vector<std::uint8_t> out;
  out.reserve(xs.size());
  for (const int x : xs) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

bool is_surrogate(std::uint32_t cp) { return cp >= 0xD800 && cp <= 0xDFFF; }

}  // namespace

TEST_CASE("well-formed inputs are accepted") {
  CHECK(oracle_validate({}).valid());
  CHECK(oracle_validate(bytes({0x39})).valid());
  CHECK(oracle_validate(bytes({0xC3, 0xA7})).valid());
  CHECK(oracle_validate(bytes({0xE9, 0x8F, 0xA1})).valid());
  CHECK(oracle_validate(bytes({0xF0, 0x9F, 0x98, 0x80})).valid());
  // A byte-order mark is ordinary text.
  CHECK(oracle_validate(bytes({0xEF, 0xBB, 0xBF, 0x39})).valid());
  // Boundary characters of every length class.
  CHECK(oracle_validate(bytes({0x7F})).valid());
  CHECK(oracle_validate(bytes({0xC2, 0x80})).valid());
  CHECK(oracle_validate(bytes({0xDF, 0xBF})).valid());
  CHECK(oracle_validate(bytes({0xE0, 0xA0, 0x80})).valid());
  CHECK(oracle_validate(bytes({0xED, 0x9F, 0xBF})).valid());
  CHECK(oracle_validate(bytes({0xEE, 0x80, 0x80})).valid());
  CHECK(oracle_validate(bytes({0xEF, 0xBF, 0xBF})).valid());
  CHECK(oracle_validate(bytes({0xF0, 0x90, 0x80, 0x80})).valid());
  CHECK(oracle_validate(bytes({0xF4, 0x8F, 0xBF, 0xBF})).valid());
}

TEST_CASE("each failure kind is classified at the leading byte") {
  CHECK(oracle_validate(bytes({0x39, 0x80})) ==
        verdict::fail(1, error_kind::too_long));
  CHECK(oracle_validate(bytes({0xED, 0xB8, 0x80})) ==
        verdict::fail(0, error_kind::surrogate));
  CHECK(oracle_validate(bytes({0xF4, 0x90, 0x80, 0x80})) ==
        verdict::fail(0, error_kind::too_large));
  CHECK(oracle_validate(bytes({0xE0, 0x81, 0xA1})) ==
        verdict::fail(0, error_kind::overlong));
  CHECK(oracle_validate(bytes({0xFA, 0x90, 0x90, 0x80, 0x80})) ==
        verdict::fail(0, error_kind::header_bits));
  // Truncation, mid-input and at the end.
  CHECK(oracle_validate(bytes({0xE9, 0x8F, 0x39})) ==
        verdict::fail(0, error_kind::too_short));
  CHECK(oracle_validate(bytes({0x39, 0xE9, 0x8F})) ==
        verdict::fail(1, error_kind::too_short));
  CHECK(oracle_validate(bytes({0xC3})) ==
        verdict::fail(0, error_kind::too_short));
  // Structure outranks range: E0 30 is a missing continuation, not an
  // overlong, even though E0 announces the overlong-prone row.
  CHECK(oracle_validate(bytes({0xE0, 0x30, 0x30})) ==
        verdict::fail(0, error_kind::too_short));
  // Only the first error is reported.
  CHECK(oracle_validate(bytes({0x80, 0xFF})) ==
        verdict::fail(0, error_kind::too_long));
  CHECK(oracle_validate(bytes({0xC0, 0x80})) ==
        verdict::fail(0, error_kind::overlong));
  CHECK(oracle_validate(bytes({0xC1, 0xBF})) ==
        verdict::fail(0, error_kind::overlong));
  CHECK(oracle_validate(bytes({0xF8, 0x80, 0x80, 0x80, 0x80})) ==
        verdict::fail(0, error_kind::header_bits));
  CHECK(oracle_validate(bytes({0xFF})) ==
        verdict::fail(0, error_kind::header_bits));
}

TEST_CASE("encode_code_point produces the shortest form") {
  CHECK(encode_code_point(0x39).size == 1);
  CHECK(encode_code_point(0x39).bytes[0] == 0x39);

  const encoded_char two = encode_code_point(0x80);
  CHECK(two.size == 2);
  CHECK(two.bytes[0] == 0xC2);
  CHECK(two.bytes[1] == 0x80);

  const encoded_char three = encode_code_point(0x93E1);
  CHECK(three.size == 3);
  CHECK(three.bytes[0] == 0xE9);
  CHECK(three.bytes[1] == 0x8F);
  CHECK(three.bytes[2] == 0xA1);

  const encoded_char four = encode_code_point(0x1F600);
  CHECK(four.size == 4);
  CHECK(four.bytes[0] == 0xF0);
  CHECK(four.bytes[1] == 0x9F);
  CHECK(four.bytes[2] == 0x98);
  CHECK(four.bytes[3] == 0x80);

  CHECK_THROWS_AS(encode_code_point(0x200000), std::out_of_range);
}

TEST_CASE("every scalar value round-trips; every non-scalar is rejected") {
  std::size_t accepted = 0;
  for (std::uint32_t cp = 0; cp <= 0x1FFFFF; ++cp) {
    const encoded_char c = encode_code_point(cp);
    const verdict v = oracle_validate(c.view());
    if (cp > 0x10FFFF) {
      REQUIRE(v == verdict::fail(0, error_kind::too_large));
    } else if (is_surrogate(cp)) {
      REQUIRE(v == verdict::fail(0, error_kind::surrogate));
    } else {
      REQUIRE(v.valid());
      ++accepted;
    }
  }
  CHECK(accepted == 1112064);
}

TEST_CASE("valid sequences compose and truncate cleanly") {
  const auto a = bytes({0xE9, 0x8F, 0xA1});
  const auto b = bytes({0x39, 0xC3, 0xA7});

  std::vector<std::uint8_t> joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  CHECK(oracle_validate(joined).valid());

  // Every prefix ending on a character boundary is itself valid.
  std::size_t i = 0;
  while (i < joined.size()) {
    CHECK(oracle_validate(bytes_view(joined.data(), i)).valid());
    const std::uint8_t lead = joined[i];
    i += lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
  }
  CHECK(oracle_validate(joined).valid());
}

TEST_CASE("identical input yields identical verdicts") {
  const auto input = bytes({0x39, 0xED, 0xA0, 0x80, 0x39});
  const verdict first = oracle_validate(input);
  CHECK(first == oracle_validate(input));
  CHECK(first == verdict::fail(1, error_kind::surrogate));
}
