#pragma once

#include <array>
#include <string>
#include <string_view>

#include "primerec/error.hpp"

namespace primerec {

enum class Strategy { LiteralFormula, WindowedSieve, OracleDirect };

inline constexpr std::array kAllStrategies{Strategy::LiteralFormula, Strategy::WindowedSieve,
                                           Strategy::OracleDirect};

/// Command-line name of a strategy: literal, windowed or oracle.
constexpr std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::LiteralFormula: return "literal";
    case Strategy::WindowedSieve: return "windowed";
    case Strategy::OracleDirect: return "oracle";
  }
  return "unknown";
}

inline Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (strategy_name(s) == name) return s;
  }
  throw error(errc::usage, "unknown strategy '" + std::string(name) + "' (expected literal, windowed or oracle)");
}

}  // namespace primerec
