#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mdsconv/distance.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNotGuaranteed = 3;
inline constexpr int kExitBudget = 4;

struct Budgets {
  std::uint64_t minors = kDefaultMinorBudget;
  TrellisConfig trellis;
  std::uint64_t nodes = kDefaultSearchNodeBudget;
};

/// MDSCONV_BUDGET syntax: a bare integer sets the trellis state budget;
/// otherwise comma-separated key=value pairs with keys minors, states,
/// transitions, nodes. Throws ParseError.
Budgets parse_budgets(std::string_view value);

/// Defaults overridden by MDSCONV_BUDGET when set.
Budgets budgets_from_env();

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdsconv::cli
