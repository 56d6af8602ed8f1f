#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mdsconv/convcode.hpp"
#include "mdsconv/linalg.hpp"

namespace mdsconv {

enum class Family { Cauchy, Exponential };

std::string_view to_string(Family family);
/// "cauchy" or "exponential". Throws ParseError.
Family parse_family(std::string_view name);

/// alpha of order (q-1)/2 and a nonsquare b in a field of odd order q.
struct CauchyParams {
  Element alpha;
  Element b;
};

/// Deterministic choice: find_element_of_order(F, (q-1)/2), find_nonsquare(F).
/// Throws EvenQ.
CauchyParams default_cauchy_params(const Field& field);

/// Checks the order of alpha and that b^((q-1)/2) = -1. Throws EvenQ, ParamDomain.
void validate_cauchy_params(const CauchyParams& params);

/// c_{ij} = 1 / (1 - b alpha^(j-i)); depends only on j - i modulo (q-1)/2.
Element cauchy_entry(const CauchyParams& params, std::int64_t j_minus_i);

/// Top-left rows x cols block of the (q-1)/2 square circulant Cauchy matrix.
/// Throws IndexOutOfRange when the block does not fit.
Matrix cauchy_block(const CauchyParams& params, std::size_t rows, std::size_t cols);

/// The full (q-1)/2 x (q-1)/2 matrix over GF(q) with default alpha, b.
/// Throws EvenQ (also for q < 3).
Matrix cauchy_matrix(std::uint64_t q);

/// Entry (i,j) = alpha^(2^(i+i0+j+j0)), exponents reduced modulo q-1.
Matrix exponential_matrix(const Element& alpha, std::size_t rows, std::size_t cols, std::size_t row_offset = 0,
                          std::size_t col_offset = 0);

/// Exponent grid beta_{il} = 2^(i+i0+l+j0) satisfies 2 beta_{il} <= beta_{il'}
/// for l < l' and 2 beta_{il} <= beta_{i'l} for i < i'.
bool exponent_grid_monotone(std::size_t rows, std::size_t cols, std::size_t row_offset = 0,
                            std::size_t col_offset = 0);

/// n >= k+delta-1 when delta < k, n >= k+2 delta-nu otherwise.
std::size_t required_n(std::size_t n, std::size_t k, std::size_t delta);

/// 2 max(k+delta, n) + 1 when delta < k, 2n(nu+1) + 1 otherwise.
std::uint64_t cauchy_order_bound(std::size_t n, std::size_t k, std::size_t delta);

/// log2 of the extension degree bound: n+k+delta-1 when delta < k,
/// nu n + k - 1 otherwise.
std::size_t exponential_degree_log2(std::size_t n, std::size_t k, std::size_t delta);

struct FieldRequirement {
  Family family = Family::Cauchy;
  /// Cauchy: smallest odd prime power meeting the bound.
  std::uint64_t q = 0;
  /// Exponential over GF(2^N): N = 2^log2_degree.
  std::size_t log2_degree = 0;
  BigInt degree;
};

/// Smallest admissible field for a construction. Throws ParamDomain, NBoundViolated.
FieldRequirement min_field_size(Family family, std::size_t n, std::size_t k, std::size_t delta);

enum class Branch { LowDegree, HighDegree };

std::string_view to_string(Branch branch);

/// Which of the sufficient conditions for MDS hold for a given code.
struct MdsCertificate {
  Branch branch = Branch::LowDegree;
  std::size_t n_required = 0;
  bool n_bound_ok = false;
  MinorCheck layout;
  /// Layout labels of the witness columns, when the layout check fails.
  std::vector<LayoutColumn> layout_witness_columns;
  /// Full-size minor check of the coefficient stack; high-degree branch only.
  std::optional<MinorCheck> stack;
  /// Gbar when k divides delta, G2 otherwise.
  std::optional<Stack> stack_checked;
  bool column_reduced = false;
  std::size_t degree = 0;
  bool degree_ok = false;
  bool guaranteed = false;
  /// First failing check: "n_bound", "layout", "stack", "column_reduced" or "degree".
  std::optional<std::string> failing_check;
};

/// Runs every check of the applicable branch. A negative verdict only means
/// the sufficient conditions fail; the code may still be MDS.
/// Throws BudgetExceeded from the minor checks.
MdsCertificate verify_mds_hypotheses(const ConvCode& code, std::uint64_t minor_budget = kDefaultMinorBudget);

struct ConstructionOptions {
  /// Field to build over. Default: smallest admissible GF(q) for Cauchy,
  /// GF(2^N) at the bound for the exponential family.
  std::optional<Field> field;
  std::optional<Element> alpha;
  /// Cauchy only.
  std::optional<Element> b;
  std::uint64_t minor_budget = kDefaultMinorBudget;
};

struct ConstructionInfo {
  Family family = Family::Cauchy;
  Branch branch = Branch::LowDegree;
  Element alpha;
  std::optional<Element> b;
  /// False when an exponential field below the degree bound was requested;
  /// the certificate then rests on the direct minor checks alone.
  bool field_bound_met = true;
  /// How coefficient columns are read off the family matrix:
  /// "block" (top-left n x (k+delta)), "cauchy-rows" or "grid-column".
  std::string reading;
};

struct Construction {
  ConvCode code;
  ConstructionInfo info;
  MdsCertificate certificate;
};

/// delta < k. Throws ParamDomain, NBoundViolated, FieldTooSmall, EvenQ.
Construction construct_low(Family family, const CodeParams& params, const ConstructionOptions& options = {});

/// delta >= k. Throws ParamDomain, NBoundViolated, FieldTooSmall, EvenQ,
/// FactorizationUnavailable.
Construction construct_high(Family family, const CodeParams& params, const ConstructionOptions& options = {});

/// Dispatches on delta < k.
Construction construct(Family family, const CodeParams& params, const ConstructionOptions& options = {});

}  // namespace mdsconv
