#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mdsconv/convcode.hpp"

namespace mdsconv {

struct TrellisConfig {
  std::uint64_t max_states = 100'000;
  std::uint64_t max_transitions = 100'000'000;
};

/// Generalized Singleton bound (n-k)(floor(delta/k)+1) + delta + 1.
/// Throws ParamDomain unless 1 <= k <= n.
std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t delta);

/// The same bound in the form n*nu - (k-t) + 1.
std::size_t singleton_bound_alt(std::size_t n, std::size_t k, std::size_t delta);

/// Exact free distance by a least-weight path search on the encoder state
/// graph.
///
/// A state holds the last nu_j input symbols of every column j (delta
/// symbols, q^delta states). The search leaves the zero state with a nonzero
/// input block and stops at the first return to the zero state. Edge costs
/// are output block weights, so zero-weight cycles are harmless and nothing
/// is assumed about catastrophicity.
///
/// For delta = 0 the answer is n-k+1 when every full-size minor of G_0 is
/// nonzero, and otherwise the minimum weight over all q^k - 1 inputs.
/// Throws BudgetExceeded when q^delta or q^(delta+k) is over budget.
std::size_t free_distance_trellis(const ConvCode& code, const TrellisConfig& config = {});

struct BruteForceResult {
  /// Minimum weight over inputs with deg u <= L and u_0 != 0. An upper bound
  /// on the free distance; equal to it once L is large enough.
  std::size_t weight = 0;
  bool upper_bound = true;
  std::uint64_t nodes_visited = 0;
};

inline constexpr std::uint64_t kDefaultSearchNodeBudget = 50'000'000;

/// Direct enumeration of input sequences u_0..u_L with u_0 != 0, encoding by
/// coefficient convolution. Branches whose finished output blocks already
/// weigh at least the best codeword found are cut, which never changes the
/// minimum. Throws BudgetExceeded once `node_budget` partial inputs have been
/// expanded.
BruteForceResult free_distance_bruteforce(const ConvCode& code, std::size_t max_input_degree,
                                          std::uint64_t node_budget = kDefaultSearchNodeBudget);

enum class MdsVerdict { Yes, No, Unknown };

struct MdsResult {
  MdsVerdict verdict = MdsVerdict::Unknown;
  std::optional<std::size_t> distance;
  std::size_t bound = 0;
};

/// Trellis distance compared with the Singleton bound; Unknown when the
/// trellis is over budget (the caller should consult the certificate).
MdsResult is_mds(const ConvCode& code, const TrellisConfig& config = {});

}  // namespace mdsconv
