#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/next_prime.hpp"
#include "primerec/op_counter.hpp"
#include "primerec/oracle.hpp"
#include "primerec/strategy.hpp"

namespace primerec::bench {

struct BenchRecord {
  Nat n;
  Strategy strategy = Strategy::WindowedSieve;
  Nat result;
  OpCounter counter;
  std::uint64_t wall_nanos = 0;  // informational only
};

struct BenchSuite {
  std::vector<Nat> sizes;
  std::vector<BenchRecord> records;
};

struct BenchOptions {
  bool deterministic = false;  // record wall_nanos as 0
};

/// One record per (size, strategy), sizes outermost. Every result is checked
/// against the oracle before it is recorded.
inline BenchSuite run_bench(std::span<const Nat> sizes, std::span<const Strategy> strategies,
                            BenchOptions options = {}) {
  if (sizes.empty()) throw error(errc::usage, "bench: at least one size is required");
  if (strategies.empty()) throw error(errc::usage, "bench: at least one strategy is required");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k].is_zero()) throw_domain("bench: sizes must be >= 1");
    if (!sizes[k].to<std::uint32_t>()) throw_domain("bench: sizes must be below 2^32");
    if (k > 0 && sizes[k] <= sizes[k - 1]) throw error(errc::usage, "bench: sizes must be strictly increasing");
  }
  for (std::size_t a = 0; a < strategies.size(); ++a) {
    for (std::size_t b = a + 1; b < strategies.size(); ++b) {
      if (strategies[a] == strategies[b]) {
        throw error(errc::usage, "bench: duplicate strategy '" + std::string(strategy_name(strategies[a])) + "'");
      }
    }
  }

  BenchSuite suite;
  suite.sizes.assign(sizes.begin(), sizes.end());
  for (const Nat& n : sizes) {
    const Nat expected = oracle::next_prime_oracle(n);
    for (Strategy s : strategies) {
      BenchRecord rec{n, s, {}, {}, 0};
      const auto start = std::chrono::steady_clock::now();
      rec.result = next_prime(n, s, rec.counter);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (!options.deterministic) {
        rec.wall_nanos = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
      }
      if (rec.result != expected) {
        throw error(errc::oracle_mismatch, "bench: n=" + n.str() + " strategy=" + std::string(strategy_name(s)) +
                                               " got=" + rec.result.str() + " expected=" + expected.str());
      }
      suite.records.push_back(std::move(rec));
    }
  }
  return suite;
}

enum class ReportFormat { csv, jsonl };

inline ReportFormat parse_report_format(std::string_view tag) {
  if (tag == "csv") return ReportFormat::csv;
  if (tag == "jsonl") return ReportFormat::jsonl;
  throw error(errc::usage, "unknown report format '" + std::string(tag) + "' (expected csv or jsonl)");
}

inline constexpr std::string_view kCsvHeader = "n,strategy,result,floor_pair_evals,multiple_marks,p_evals,wall_nanos";

inline void emit_report(const BenchSuite& suite, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : suite.records) {
      out << r.n << ',' << strategy_name(r.strategy) << ',' << r.result << ',' << r.counter.floor_pair_evals << ','
          << r.counter.multiple_marks << ',' << r.counter.p_evals << ',' << r.wall_nanos << '\n';
    }
    return;
  }
  for (const BenchRecord& r : suite.records) {
    // run_bench keeps n below 2^32, so n and its next prime fit in 64 bits.
    nlohmann::ordered_json row;
    row["n"] = *r.n.to<std::uint64_t>();
    row["strategy"] = strategy_name(r.strategy);
    row["result"] = *r.result.to<std::uint64_t>();
    row["floor_pair_evals"] = r.counter.floor_pair_evals;
    row["multiple_marks"] = r.counter.multiple_marks;
    row["p_evals"] = r.counter.p_evals;
    row["wall_nanos"] = r.wall_nanos;
    out << row.dump() << '\n';
  }
}

}  // namespace primerec::bench
