#pragma once

// Command-line front end. Exit status: 0 success, 1 verification or oracle
// failure, 2 usage or domain error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primerec/bench.hpp"
#include "primerec/core_formula.hpp"
#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/next_prime.hpp"
#include "primerec/strategy.hpp"
#include "primerec/verify.hpp"

namespace primerec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::domain:
    case errc::usage: return kExitUsage;
    case errc::invariant_violation:
    case errc::oracle_mismatch: return kExitFailure;
  }
  return kExitFailure;
}

namespace detail {

inline Nat parse_at_least(const std::string& text, unsigned minimum, const std::string& what) {
  Nat value = Nat::parse(text);
  if (value < minimum) {
    throw error(errc::usage, what + " must be >= " + std::to_string(minimum) + ", got " + text);
  }
  return value;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Next-prime recurrence: evaluation, verification and benchmarks", "primerec"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string strategy_text = "windowed";
  app.add_option("--strategy", strategy_text, "Evaluation strategy: literal, windowed or oracle")
      ->capture_default_str();

  std::string n_text;
  auto* next_cmd = app.add_subcommand("next", "Print F(n), the smallest prime above n");
  next_cmd->add_option("n", n_text, "Integer n >= 1")->required();

  std::string count_text;
  auto* seq_cmd = app.add_subcommand("seq", "Print the first <count> primes by iterating F from 2");
  seq_cmd->add_option("count", count_text, "Number of primes, >= 1")->required();

  std::string limit_text;
  auto* verify_cmd = app.add_subcommand("verify", "Check F(p) against trial division for every prime p <= limit");
  verify_cmd->add_option("limit", limit_text, "Upper bound, >= 2")->required();

  std::string eval_kind;
  std::string eval_arg;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate d(i) or P(i) by the literal floor formulas");
  eval_cmd->add_option("kind", eval_kind, "dcount or pfunc")->required()->check(CLI::IsMember({"dcount", "pfunc"}));
  eval_cmd->add_option("i", eval_arg, "Argument i")->required();

  std::vector<std::string> size_texts;
  std::vector<std::string> strategy_texts{"windowed"};
  std::string format_text = "csv";
  std::string output_path;
  bool deterministic = false;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts per strategy and input size");
  bench_cmd->add_option("--sizes", size_texts, "Comma-separated strictly increasing sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--strategies", strategy_texts, "Comma-separated strategies")->delimiter(',');
  bench_cmd->add_option("--format", format_text, "csv or jsonl")->capture_default_str();
  bench_cmd->add_option("--output", output_path, "Write the report to this file instead of stdout");
  bench_cmd->add_flag("--deterministic", deterministic, "Write wall_nanos as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Strategy strategy = parse_strategy(strategy_text);

    if (next_cmd->parsed()) {
      const Nat n = detail::parse_at_least(n_text, 1, "n");
      out << next_prime(n, strategy) << '\n';
      return kExitOk;
    }

    if (seq_cmd->parsed()) {
      const Nat count = detail::parse_at_least(count_text, 1, "count");
      const auto length = count.to<std::size_t>();
      if (!length) throw error(errc::usage, "count is too large");
      for (const Nat& p : prime_sequence(*length, strategy)) out << p << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const Nat limit = detail::parse_at_least(limit_text, 2, "limit");
      const VerificationReport report = run_verify(limit, strategy);
      print_report(report, out);
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (eval_cmd->parsed()) {
      if (eval_kind == "dcount") {
        const Nat i = detail::parse_at_least(eval_arg, 1, "dcount: d(i) is defined for integers i >= 1; i");
        out << divisor_count_literal(i) << '\n';
      } else {
        const Nat i = detail::parse_at_least(eval_arg, 2, "pfunc: P(i) is defined for integers i >= 2; i");
        out << p_literal(i) << '\n';
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      std::vector<Nat> sizes;
      for (const auto& text : size_texts) sizes.push_back(detail::parse_at_least(text, 1, "bench size"));
      std::vector<Strategy> strategies;
      for (const auto& text : strategy_texts) strategies.push_back(parse_strategy(text));
      const auto format = bench::parse_report_format(format_text);

      const auto suite = bench::run_bench(sizes, strategies, {.deterministic = deterministic});
      if (output_path.empty()) {
        bench::emit_report(suite, format, out);
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw error(errc::usage, "cannot open output file '" + output_path + "'");
        bench::emit_report(suite, format, file);
      }
      return kExitOk;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace primerec::cli
