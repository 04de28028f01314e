// utf8v: branchless and vectorized UTF-8 validation kernels
// Copyright 2026 The utf8v Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: validate files, generate corpora, benchmark the
// validators, dump the tables. Exit codes: 0 success/valid, 1 malformed
// input detected, 2 usage or I/O error, 3 internal consistency failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "utf8v/bench.hpp"
#include "utf8v/corpus.hpp"
#include "utf8v/fsm.hpp"
#include "utf8v/lookup.hpp"
#include "utf8v/oracle.hpp"
#include "utf8v/scalar.hpp"
#include "utf8v/tables.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_invalid = 1;
constexpr int k_exit_usage = 2;
constexpr int k_exit_inconsistent = 3;

std::vector<std::uint8_t> read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Empty path means stdin. Returns false on I/O failure.
bool read_input(const std::string& path, std::vector<std::uint8_t>& out) {
  if (path.empty()) {
    out = read_stream(std::cin);
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  out = read_stream(file);
  return true;
}

// "1-3", "1,2,4", "3" -> sorted unique kind list. Returns empty on a parse
// error.
std::vector<int> parse_kinds(const std::string& text) {
  std::vector<int> kinds;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t dash = token.find('-');
    try {
      if (dash == std::string::npos) {
        kinds.push_back(std::stoi(token));
      } else {
        const int lo = std::stoi(token.substr(0, dash));
        const int hi = std::stoi(token.substr(dash + 1));
        if (lo > hi) return {};
        for (int k = lo; k <= hi; ++k) kinds.push_back(k);
      }
    } catch (const std::exception&) {
      return {};
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kinds.empty()) return {};
  for (const int k : kinds)
    if (k < 1 || k > 4) return {};
  return kinds;
}

utf8v::named_validator make_validator(const std::string& algo,
                                      bool force_fallback) {
  using utf8v::bytes_view;
  if (algo == "oracle")
    return {algo, [](bytes_view b) { return utf8v::oracle_validate(b).valid(); }};
  if (algo == "branchy")
    return {algo, [](bytes_view b) { return utf8v::validate_branchy(b).valid(); }};
  if (algo == "branchy-ascii")
    return {algo,
            [](bytes_view b) { return utf8v::validate_branchy_ascii(b).valid(); }};
  if (algo == "fsm")
    return {algo,
            [](bytes_view b) { return utf8v::validate_fsm_interleaved(b); }};
  if (algo == "fsm-plain")
    return {algo, [](bytes_view b) {
              return utf8v::validate_fsm(b) == utf8v::fsm_state::valid;
            }};
  // lookup
  if (force_fallback)
    return {"lookup",
            [](bytes_view b) { return utf8v::validate_lookup_fallback(b); }};
  return {"lookup", [](bytes_view b) { return utf8v::validate_lookup(b); }};
}

void print_lookup_backend(bool force_fallback) {
  const utf8v::lookup_backend& active = force_fallback
                                            ? utf8v::lookup_backends().back()
                                            : utf8v::lookup_backends().front();
  std::cerr << "lookup backend: " << active.name << " (" << active.width
            << "-byte vectors)" << (force_fallback ? ", forced" : "") << "\n";
}

int run_validate(const std::string& algo, const std::string& path,
                 bool force_fallback, bool as_json) {
  std::vector<std::uint8_t> bytes;
  if (!read_input(path, bytes)) return k_exit_usage;

  const utf8v::named_validator v = make_validator(algo, force_fallback);
  if (v.validate(bytes)) {
    if (as_json)
      std::cout << nlohmann::json{{"valid", true}}.dump() << "\n";
    else
      std::cout << "valid\n";
    return k_exit_ok;
  }

  // Fast validators report only the bit; the reference scan recovers offset
  // and kind. If it refuses to reproduce the failure, the validators
  // disagree and that is an internal error, not a verdict.
  const utf8v::verdict verdict = utf8v::oracle_validate(bytes);
  if (verdict.valid()) {
    std::cerr << "error: '" << algo
              << "' rejected input the reference accepts\n";
    return k_exit_inconsistent;
  }
  if (as_json) {
    std::cout << nlohmann::json{{"valid", false},
                                {"offset", verdict.error->offset},
                                {"kind", to_string(verdict.error->kind)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "invalid: " << to_string(verdict.error->kind) << " at offset "
              << verdict.error->offset << "\n";
  }
  return k_exit_invalid;
}

int run_gen(const std::string& kinds_text, std::size_t size,
            std::uint64_t seed, const std::string& invalid,
            const std::string& out_path) {
  const std::vector<int> kinds = parse_kinds(kinds_text);
  if (kinds.empty()) {
    std::cerr << "error: bad --kinds '" << kinds_text << "'\n";
    return k_exit_usage;
  }
  const utf8v::generator_spec spec{kinds, size, seed};

  std::vector<std::uint8_t> bytes;
  if (invalid.empty()) {
    bytes = utf8v::generate_valid(spec);
  } else {
    utf8v::mutation_strategy strategy;
    if (!utf8v::parse_mutation_strategy(invalid, strategy)) {
      std::cerr << "error: unknown strategy '" << invalid << "'\n";
      return k_exit_usage;
    }
    bytes = utf8v::generate_invalid(spec, strategy);
  }

  const nlohmann::json meta = {
      {"algorithm", utf8v::k_rng_algorithm},
      {"seed", seed},
      {"kinds", utf8v::canonical_kinds(kinds)},
      {"target_size", size},
      {"strategy", invalid.empty() ? nlohmann::json(nullptr)
                                   : nlohmann::json(invalid)},
      {"bytes_written", bytes.size()},
  };

  if (out_path.empty()) {
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    std::cerr << meta.dump() << "\n";
    return std::cout ? k_exit_ok : k_exit_usage;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return k_exit_usage;
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return k_exit_usage;
  }
  std::ofstream meta_out(out_path + ".json");
  meta_out << meta.dump(2) << "\n";
  if (!meta_out) {
    std::cerr << "error: failed writing '" << out_path << ".json'\n";
    return k_exit_usage;
  }
  return k_exit_ok;
}

int run_bench_cmd(const std::vector<std::string>& algos,
                  const std::string& file, const std::string& kinds_text,
                  std::size_t size, std::uint64_t seed, int repeats,
                  bool compensate, bool parallel, bool force_fallback,
                  bool as_json) {
  std::vector<std::uint8_t> bytes;
  std::string input_name;
  if (!file.empty()) {
    if (!read_input(file, bytes)) return k_exit_usage;
    input_name = file;
  } else {
    const std::vector<int> kinds = parse_kinds(kinds_text);
    if (kinds.empty()) {
      std::cerr << "error: bad --kinds '" << kinds_text << "'\n";
      return k_exit_usage;
    }
    bytes = utf8v::generate_valid({kinds, size, seed});
    input_name = "kinds=" + kinds_text;
  }

  std::vector<utf8v::named_validator> validators;
  validators.reserve(algos.size());
  for (const std::string& algo : algos)
    validators.push_back(make_validator(algo, force_fallback));

  print_lookup_backend(force_fallback);
  utf8v::bench_options options;
  options.repeats = repeats;
  options.compensate = compensate;
  options.parallel = parallel;
  try {
    const std::vector<utf8v::bench_report> reports =
        utf8v::run_bench(validators, bytes, input_name, options);
    std::cout << utf8v::emit_report(
        reports,
        as_json ? utf8v::report_format::json : utf8v::report_format::human);
  } catch (const utf8v::validator_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_inconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  }
  return k_exit_ok;
}

int run_tables(bool dump, bool verify) {
  if (verify) {
    utf8v::pair_check_failure failure{};
    if (!utf8v::verify_nibble_tables(utf8v::k_nibble_tables, &failure)) {
      std::fprintf(stderr,
                   "error: nibble tables wrong for pair %02X %02X "
                   "(classified %02X)\n",
                   failure.byte1, failure.byte2, failure.classified);
      return k_exit_inconsistent;
    }
    std::cout << "nibble tables verified: 65536 pairs ok\n";
  }
  if (dump || !verify) std::cout << utf8v::dump_tables();
  return k_exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UTF-8 validation toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> algo_names = {
      "oracle", "branchy", "branchy-ascii", "fsm", "fsm-plain", "lookup"};

  // validate
  auto* validate = app.add_subcommand("validate", "Check one input");
  std::string v_algo = "lookup";
  std::string v_file;
  bool v_force_fallback = false;
  bool v_json = false;
  validate->add_option("--algo", v_algo, "Validator to use")
      ->check(CLI::IsMember(algo_names));
  validate->add_option("file", v_file, "Input file (stdin when omitted)");
  validate->add_flag("--force-fallback", v_force_fallback,
                     "Pin the lookup validator to its portable kernels");
  validate->add_flag("--json", v_json, "Machine-readable verdict");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a corpus");
  std::string g_kinds = "1-3";
  std::size_t g_size = 16384;
  std::uint64_t g_seed = 42;
  std::string g_invalid;
  std::string g_out;
  gen->add_option("--kinds", g_kinds,
                  "Allowed encoded lengths, e.g. 1-3 or 1,2,4");
  gen->add_option("--size", g_size, "Target size in bytes");
  gen->add_option("--seed", g_seed, "Generator seed");
  gen->add_option("--invalid", g_invalid,
                  "Break the corpus with this strategy: flip, truncate, "
                  "insert_continuation, overlong, surrogate, too_large");
  gen->add_option("--out", g_out,
                  "Output file; a .json sidecar records the recipe "
                  "(stdout + stderr when omitted)");

  // bench
  auto* bench = app.add_subcommand("bench", "Time the validators");
  std::vector<std::string> b_algos = {"branchy", "branchy-ascii", "fsm",
                                      "lookup"};
  std::string b_file;
  std::string b_kinds = "1-3";
  std::size_t b_size = 16384;
  std::uint64_t b_seed = 42;
  int b_repeats = 1000;
  bool b_compensate = false;
  bool b_parallel = false;
  bool b_force_fallback = false;
  bool b_json = false;
  bench->add_option("--algo", b_algos, "Validators to time (repeatable)")
      ->check(CLI::IsMember(algo_names));
  bench->add_option("--file", b_file, "Benchmark this file");
  bench->add_option("--kinds", b_kinds, "Generated input: allowed lengths");
  bench->add_option("--size", b_size, "Generated input: target size");
  bench->add_option("--seed", b_seed, "Generated input: seed");
  bench->add_option("--repeat", b_repeats, "Timed passes per validator")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--compensate", b_compensate,
                  "Report doubled-input minus input timings (small inputs)");
  bench->add_flag("--parallel", b_parallel,
                  "Time validators in parallel threads (one loop each)");
  bench->add_flag("--force-fallback", b_force_fallback,
                  "Pin the lookup validator to its portable kernels");
  bench->add_flag("--json", b_json, "Machine-readable reports");

  // tables
  auto* tables = app.add_subcommand("tables", "Print the generated tables");
  bool t_dump = false;
  bool t_verify = false;
  tables->add_flag("--dump", t_dump, "Dump nibble and state tables as hex");
  tables->add_flag("--verify", t_verify,
                   "Re-check the nibble tables against the pair predicate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? k_exit_ok : k_exit_usage;
  }

  try {
    if (validate->parsed())
      return run_validate(v_algo, v_file, v_force_fallback, v_json);
    if (gen->parsed()) return run_gen(g_kinds, g_size, g_seed, g_invalid, g_out);
    if (bench->parsed())
      return run_bench_cmd(b_algos, b_file, b_kinds, b_size, b_seed, b_repeats,
                           b_compensate, b_parallel, b_force_fallback, b_json);
    if (tables->parsed()) return run_tables(t_dump, t_verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  }
  return k_exit_usage;
}
