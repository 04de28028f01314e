// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/fsm.hpp"

#include <doctest.h>

#include <vector>

#include "utf8v/corpus.hpp"
#include "utf8v/oracle.hpp"

using namespace utf8v;

namespace {

std::vector<std::uint8_t> bytes(std::initializer_list<int> xs) {
  std::vector<std::uint8_t> out;
  out.reserve(xs.size());
  for (const int x : xs) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

}  // namespace

TEST_CASE("plain fold lands in the documented states") {
  CHECK(validate_fsm({}) == fsm_state::valid);
  CHECK(validate_fsm(bytes({0x39})) == fsm_state::valid);
  CHECK(validate_fsm(bytes({0xE9, 0x8F, 0xA1})) == fsm_state::valid);
  // Ending inside a character is a countdown state, not an error.
  CHECK(validate_fsm(bytes({0xE9, 0x8F})) == fsm_state::one_more);
  CHECK(validate_fsm(bytes({0xE9})) == fsm_state::two_more);
  CHECK(validate_fsm(bytes({0xF1})) == fsm_state::three_more);
  CHECK(validate_fsm(bytes({0xE0})) == fsm_state::three_byte_overlong);
  CHECK(validate_fsm(bytes({0xED})) == fsm_state::three_byte_surrogate);
  CHECK(validate_fsm(bytes({0xF0})) == fsm_state::four_byte_overlong);
  CHECK(validate_fsm(bytes({0xF4})) == fsm_state::four_byte_too_large);
  // Hard failures reach the absorbing state and stay there.
  CHECK(validate_fsm(bytes({0xED, 0xA0, 0x80})) == fsm_state::error);
  CHECK(validate_fsm(bytes({0xED, 0xA0, 0x80, 0x39, 0x39})) ==
        fsm_state::error);
  CHECK(validate_fsm(bytes({0xC0})) == fsm_state::error);
  CHECK(validate_fsm(bytes({0xFF})) == fsm_state::error);
}

TEST_CASE("constrained second bytes accept exactly their legal ranges") {
  CHECK(validate_fsm(bytes({0xE0, 0x9F})) == fsm_state::error);
  CHECK(validate_fsm(bytes({0xE0, 0xA0})) == fsm_state::one_more);
  CHECK(validate_fsm(bytes({0xED, 0x9F})) == fsm_state::one_more);
  CHECK(validate_fsm(bytes({0xED, 0xA0})) == fsm_state::error);
  CHECK(validate_fsm(bytes({0xF0, 0x8F})) == fsm_state::error);
  CHECK(validate_fsm(bytes({0xF0, 0x90})) == fsm_state::two_more);
  CHECK(validate_fsm(bytes({0xF4, 0x8F})) == fsm_state::two_more);
  CHECK(validate_fsm(bytes({0xF4, 0x90})) == fsm_state::error);
}

TEST_CASE("the fold composes across any split point") {
  const auto input = bytes({0x39, 0xE9, 0x8F, 0xA1, 0xF0, 0x9F, 0x98, 0x80,
                            0xC3, 0xA7, 0xED, 0xB0, 0x39, 0x80, 0x41});
  for (std::size_t cut = 0; cut <= input.size(); ++cut) {
    const fsm_state mid = validate_fsm(bytes_view(input.data(), cut));
    const fsm_state whole = validate_fsm(
        bytes_view(input.data() + cut, input.size() - cut), mid);
    CHECK(whole == validate_fsm(input));
  }
}

TEST_CASE("plain fold agrees with the reference bit up to length 2") {
  std::vector<std::uint8_t> input;
  const auto check = [&] {
    const bool expected = oracle_validate(input).valid();
    REQUIRE((validate_fsm(input) == fsm_state::valid) == expected);
    REQUIRE(validate_fsm_interleaved(input) == expected);
  };
  input = {};
  check();
  for (unsigned a = 0; a < 256; ++a) {
    input = {static_cast<std::uint8_t>(a)};
    check();
  }
  for (unsigned a = 0; a < 256; ++a)
    for (unsigned b = 0; b < 256; ++b) {
      input = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
      check();
    }
}

TEST_CASE("interleaved variant handles region-splitting edge cases") {
  // Long pure ASCII: every region is trivially independent.
  CHECK(validate_fsm_interleaved(std::vector<std::uint8_t>(3072, 0x41)));

  // 48 bytes of 3-byte characters: the naive thirds all land mid-character
  // and must be nudged to boundaries.
  std::vector<std::uint8_t> packed;
  for (int i = 0; i < 16; ++i) {
    packed.push_back(0xE9);
    packed.push_back(0x8F);
    packed.push_back(0xA1);
  }
  CHECK(validate_fsm_interleaved(packed));

  // A run of 12 continuation bytes leaves no region start within reach;
  // that run is itself proof of malformedness.
  std::vector<std::uint8_t> run(10, 0x41);
  run.insert(run.end(), 12, 0x80);
  run.insert(run.end(), 10, 0x41);
  CHECK_FALSE(validate_fsm_interleaved(run));
  CHECK_FALSE(oracle_validate(run).valid());

  // Just under and just over the interleaving threshold.
  for (std::size_t n : {31u, 32u, 33u}) {
    const std::vector<std::uint8_t> ascii(n, 0x41);
    CHECK(validate_fsm_interleaved(ascii));
  }
}

TEST_CASE("interleaved and plain variants agree on generated corpora") {
  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    const generator_spec spec{{1, 2, 3, 4}, 512 + seed * 37, seed};
    const std::vector<std::uint8_t> good = generate_valid(spec);
    REQUIRE(validate_fsm(good) == fsm_state::valid);
    REQUIRE(validate_fsm_interleaved(good));

    for (const mutation_strategy strategy : k_mutation_strategies) {
      const std::vector<std::uint8_t> bad = generate_invalid(spec, strategy);
      REQUIRE(validate_fsm(bad) != fsm_state::valid);
      REQUIRE_FALSE(validate_fsm_interleaved(bad));
    }
  }
}

TEST_CASE("random byte soup never splits fsm from the reference") {
  splitmix64 rng(0xF5EEDull);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t size = rng.below(200);
    std::vector<std::uint8_t> input(size);
    for (auto& b : input) b = static_cast<std::uint8_t>(rng.below(256));
    const bool expected = oracle_validate(input).valid();
    REQUIRE((validate_fsm(input) == fsm_state::valid) == expected);
    REQUIRE(validate_fsm_interleaved(input) == expected);
  }
}
