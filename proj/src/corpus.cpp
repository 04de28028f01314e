// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0
#include "utf8v/corpus.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "utf8v/oracle.hpp"

namespace utf8v {
namespace {

// Byte length of the character starting at a lead byte of well-formed text.
std::size_t char_length(std::uint8_t lead) {
  if (lead < 0x80) return 1;
  if (lead < 0xE0) return 2;
  if (lead < 0xF0) return 3;
  return 4;
}

// Offsets where a character starts, plus the end offset. Input must be well
// formed.
std::vector<std::size_t> character_boundaries(
    const std::vector<std::uint8_t>& bytes) {
  std::vector<std::size_t> boundaries;
  std::size_t i = 0;
  for (;;) {
    boundaries.push_back(i);
    if (i >= bytes.size()) break;
    i += char_length(bytes[i]);
  }
  return boundaries;
}

std::uint8_t random_continuation(splitmix64& rng) {
  return static_cast<std::uint8_t>(0x80 + rng.below(0x40));
}

void splice(std::vector<std::uint8_t>& bytes, std::size_t at,
            std::initializer_list<std::uint8_t> piece) {
  bytes.insert(bytes.begin() + static_cast<std::ptrdiff_t>(at), piece);
}

}  // namespace

std::vector<int> canonical_kinds(const std::vector<int>& kinds) {
  std::vector<int> out = kinds;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("kinds must be nonempty");
  if (out.front() < 1 || out.back() > 4)
    throw std::invalid_argument("kinds must be within 1..4");
  return out;
}

std::uint32_t code_point_class_size(int kind) {
  switch (kind) {
    case 1: return 0x80;            // U+0000..U+007F
    case 2: return 0x800 - 0x80;    // U+0080..U+07FF
    case 3: return 0x10000 - 0x800 - 0x800;  // U+0800..U+FFFF minus surrogates
    case 4: return 0x110000 - 0x10000;       // U+10000..U+10FFFF
    default: throw std::invalid_argument("kind must be within 1..4");
  }
}

std::uint32_t random_code_point(int kind, splitmix64& rng) {
  const auto index = static_cast<std::uint32_t>(rng.below(code_point_class_size(kind)));
  switch (kind) {
    case 1: return index;
    case 2: return 0x80 + index;
    case 3: {
      // The 3-byte class has a hole at the surrogates; indices at or past
      // U+D800 shift over it.
      std::uint32_t cp = 0x800 + index;
      if (cp >= 0xD800) cp += 0x800;
      return cp;
    }
    default: return 0x10000 + index;
  }
}

std::vector<std::uint8_t> generate_valid(const generator_spec& spec) {
  const std::vector<int> kinds = canonical_kinds(spec.kinds);
  splitmix64 rng(spec.seed);
  std::vector<std::uint8_t> out;
  out.reserve(spec.target_size + 4);
  while (out.size() < spec.target_size) {
    const int kind = kinds[rng.below(kinds.size())];
    const encoded_char c = encode_code_point(random_code_point(kind, rng));
    out.insert(out.end(), c.view().begin(), c.view().end());
  }
  return out;
}

bool parse_mutation_strategy(std::string_view name, mutation_strategy& out) {
  for (const mutation_strategy s : k_mutation_strategies) {
    if (name == to_string(s)) {
      out = s;
      return true;
    }
  }
  return false;
}

std::vector<std::uint8_t> generate_invalid(const generator_spec& spec,
                                           mutation_strategy strategy) {
  generator_spec base = spec;
  base.target_size = std::max<std::size_t>(spec.target_size, 1);
  std::vector<std::uint8_t> bytes = generate_valid(base);

  // The mutation draws from its own stream so the base corpus stays the
  // generate_valid output for the same spec.
  splitmix64 rng(spec.seed ^
                 (0x9E3779B97F4A7C15ull *
                  (static_cast<std::uint64_t>(strategy) + 1)));
  const std::vector<std::size_t> boundaries = character_boundaries(bytes);
  const auto random_boundary = [&] {
    return boundaries[rng.below(boundaries.size())];
  };

  switch (strategy) {
    case mutation_strategy::flip:
      // A single-byte rewrite can land on another valid string (ASCII to
      // ASCII, continuation to continuation); redraw until it does not.
      for (;;) {
        const std::size_t pos = rng.below(bytes.size());
        const auto value = static_cast<std::uint8_t>(rng.below(256));
        if (value == bytes[pos]) continue;
        const std::uint8_t saved = bytes[pos];
        bytes[pos] = value;
        if (!oracle_validate(bytes).valid()) return bytes;
        bytes[pos] = saved;
      }
    case mutation_strategy::truncate: {
      std::vector<std::size_t> multibyte;
      for (const std::size_t b : boundaries)
        if (b < bytes.size() && char_length(bytes[b]) > 1) multibyte.push_back(b);
      if (multibyte.empty()) {
        // All-ASCII corpus: append a multi-byte character minus its last
        // byte, turning the tail into the truncation.
        const int kind = 2 + static_cast<int>(rng.below(3));
        const encoded_char c = encode_code_point(random_code_point(kind, rng));
        bytes.insert(bytes.end(), c.view().begin(), c.view().end() - 1);
        return bytes;
      }
      const std::size_t start = multibyte[rng.below(multibyte.size())];
      const std::size_t keep = 1 + rng.below(char_length(bytes[start]) - 1);
      bytes.resize(start + keep);
      return bytes;
    }
    case mutation_strategy::insert_continuation:
      splice(bytes, random_boundary(), {random_continuation(rng)});
      return bytes;
    case mutation_strategy::overlong:
      switch (rng.below(3)) {
        case 0:
          splice(bytes, random_boundary(),
                 {static_cast<std::uint8_t>(0xC0 + rng.below(2)),
                  random_continuation(rng)});
          break;
        case 1:
          splice(bytes, random_boundary(),
                 {0xE0, static_cast<std::uint8_t>(0x80 + rng.below(0x20)),
                  random_continuation(rng)});
          break;
        default:
          splice(bytes, random_boundary(),
                 {0xF0, static_cast<std::uint8_t>(0x80 + rng.below(0x10)),
                  random_continuation(rng), random_continuation(rng)});
          break;
      }
      return bytes;
    case mutation_strategy::surrogate:
      splice(bytes, random_boundary(),
             {0xED, static_cast<std::uint8_t>(0xA0 + rng.below(0x20)),
              random_continuation(rng)});
      return bytes;
    case mutation_strategy::too_large:
      splice(bytes, random_boundary(),
             {0xF4, static_cast<std::uint8_t>(0x90 + rng.below(0x30)),
              random_continuation(rng), random_continuation(rng)});
      return bytes;
  }
  assert(false && "unreachable");
  return bytes;
}

}  // namespace utf8v
