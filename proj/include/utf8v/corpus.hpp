// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace utf8v {

// Seedable generator with a pinned algorithm so corpora reproduce byte for
// byte anywhere; the identifier travels with generated files. splitmix64 is
// the Steele/Lea/Flood mixer: a Weyl sequence with two multiply-xorshift
// finalization rounds per output.
inline constexpr std::string_view k_rng_algorithm = "splitmix64";

class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection below 2^64 mod bound keeps
  // the draw unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Recipe for one corpus: which encoded lengths may occur, how many bytes to
// produce at least, and the seed. kinds must be a nonempty subset of
// {1, 2, 3, 4}; duplicates and ordering are ignored.
struct generator_spec {
  std::vector<int> kinds;
  std::size_t target_size = 0;
  std::uint64_t seed = 0;
};

// Sorted, deduplicated kinds; throws std::invalid_argument when empty or
// containing anything outside 1..4.
std::vector<int> canonical_kinds(const std::vector<int>& kinds);

// Count of code points whose shortest encoding has exactly `kind` bytes.
std::uint32_t code_point_class_size(int kind);

// Uniform draw from the valid code points of exactly `kind` encoded bytes;
// surrogates are excluded from the 3-byte class.
std::uint32_t random_code_point(int kind, splitmix64& rng);

// Characters drawn kind-first (uniform over kinds, then uniform within the
// class) and appended until at least target_size bytes exist, so the result
// overshoots by at most 3 bytes. Always well formed.
std::vector<std::uint8_t> generate_valid(const generator_spec& spec);

// Ways generate_invalid can break a corpus. Every strategy yields an input
// the reference validator rejects.
enum class mutation_strategy : std::uint8_t {
  flip,                 // rewrite one byte until the result is invalid
  truncate,             // end the string inside a multi-byte character
  insert_continuation,  // stray continuation byte at a character boundary
  overlong,             // splice a longer-than-shortest-form sequence
  surrogate,            // splice an encoded U+D800..U+DFFF
  too_large,            // splice an encoding above U+10FFFF
};

inline constexpr mutation_strategy k_mutation_strategies[] = {
    mutation_strategy::flip,
    mutation_strategy::truncate,
    mutation_strategy::insert_continuation,
    mutation_strategy::overlong,
    mutation_strategy::surrogate,
    mutation_strategy::too_large,
};

constexpr std::string_view to_string(mutation_strategy s) {
  switch (s) {
    case mutation_strategy::flip: return "flip";
    case mutation_strategy::truncate: return "truncate";
    case mutation_strategy::insert_continuation: return "insert_continuation";
    case mutation_strategy::overlong: return "overlong";
    case mutation_strategy::surrogate: return "surrogate";
    case mutation_strategy::too_large: return "too_large";
  }
  return "?";
}

// nullopt-free parse helper for the CLI: returns true and writes `out` on a
// recognized name.
bool parse_mutation_strategy(std::string_view name, mutation_strategy& out);

// A generate_valid corpus for the same spec (target_size raised to at least
// 1), broken by the given strategy at a position drawn from a separate
// stream. Deterministic per (spec, strategy).
std::vector<std::uint8_t> generate_invalid(const generator_spec& spec,
                                           mutation_strategy strategy);

}  // namespace utf8v
