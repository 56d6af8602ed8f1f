#include "mdsconv/constructions.hpp"

#include <algorithm>

namespace mdsconv {

std::string_view to_string(Family family) {
  return family == Family::Cauchy ? "cauchy" : "exponential";
}

Family parse_family(std::string_view name) {
  if (name == "cauchy") return Family::Cauchy;
  if (name == "exponential") return Family::Exponential;
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "' (expected cauchy or exponential)");
}

std::string_view to_string(Branch branch) { return branch == Branch::LowDegree ? "delta<k" : "delta>=k"; }

namespace {

std::uint64_t odd_order(const Field& field) {
  const auto q = field.order_u64();
  if (!q) throw Error(ErrorCode::ParamDomain, "Cauchy matrices need q < 2^64");
  if (*q % 2 == 0 || *q < 3) throw Error(ErrorCode::EvenQ, "Cauchy matrices need an odd field order, got " + field.name());
  return *q;
}

}  // namespace

CauchyParams default_cauchy_params(const Field& field) {
  const std::uint64_t q = odd_order(field);
  return CauchyParams{find_element_of_order(field, BigInt((q - 1) / 2)), find_nonsquare(field)};
}

void validate_cauchy_params(const CauchyParams& params) {
  const Field& field = params.alpha.field();
  const std::uint64_t q = odd_order(field);
  if (params.b.field() != field) throw Error(ErrorCode::FieldMismatch, "alpha and b lie in different fields");
  if (params.alpha.is_zero() || element_order(params.alpha) != BigInt((q - 1) / 2)) {
    throw Error(ErrorCode::ParamDomain, "alpha must have order (q-1)/2");
  }
  if (params.b.pow((q - 1) / 2) != -field.one()) throw Error(ErrorCode::ParamDomain, "b must be a nonsquare");
}

Element cauchy_entry(const CauchyParams& params, std::int64_t j_minus_i) {
  const Field& field = params.alpha.field();
  const auto m = static_cast<std::int64_t>((odd_order(field) - 1) / 2);
  const auto e = static_cast<std::uint64_t>(((j_minus_i % m) + m) % m);
  return (field.one() - params.b * params.alpha.pow(e)).inverse();
}

Matrix cauchy_block(const CauchyParams& params, std::size_t rows, std::size_t cols) {
  const Field& field = params.alpha.field();
  const std::uint64_t m = (odd_order(field) - 1) / 2;
  if (rows > m || cols > m) {
    throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(rows) + "x" + std::to_string(cols) +
                                                " does not fit the " + std::to_string(m) + "x" + std::to_string(m) +
                                                " Cauchy matrix of " + field.name());
  }
  // Entries depend on j - i only; compute each diagonal once.
  std::vector<Element> diag;
  diag.reserve(rows + cols);
  for (std::size_t d = 0; d < rows + cols; ++d) {
    diag.push_back(cauchy_entry(params, static_cast<std::int64_t>(d) - static_cast<std::int64_t>(rows)));
  }
  Matrix c(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) c(i, j) = diag[j + rows - i];
  }
  return c;
}

Matrix cauchy_matrix(std::uint64_t q) {
  if (q % 2 == 0 || q < 3) throw Error(ErrorCode::EvenQ, "Cauchy matrices need an odd q >= 3");
  const Field field = Field::of_order(q);
  const auto m = static_cast<std::size_t>((q - 1) / 2);
  return cauchy_block(default_cauchy_params(field), m, m);
}

Matrix exponential_matrix(const Element& alpha, std::size_t rows, std::size_t cols, std::size_t row_offset,
                          std::size_t col_offset) {
  const std::size_t base = row_offset + col_offset;
  std::vector<Element> powers;
  powers.reserve(rows + cols);
  for (std::size_t s = 0; s + 1 < rows + cols || s == 0; ++s) powers.push_back(alpha.pow(BigInt(1) << (base + s)));
  Matrix m(alpha.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = powers[i + j];
  }
  return m;
}

bool exponent_grid_monotone(std::size_t rows, std::size_t cols, std::size_t row_offset, std::size_t col_offset) {
  auto beta = [&](std::size_t i, std::size_t l) { return BigInt(1) << (i + row_offset + l + col_offset); };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t l = 0; l < cols; ++l) {
      for (std::size_t l2 = l + 1; l2 < cols; ++l2) {
        if (2 * beta(i, l) > beta(i, l2)) return false;
      }
      for (std::size_t i2 = i + 1; i2 < rows; ++i2) {
        if (2 * beta(i, l) > beta(i2, l)) return false;
      }
    }
  }
  return true;
}

std::size_t required_n(std::size_t n, std::size_t k, std::size_t delta) {
  const CodeParams params{n, k, delta};
  params.validate();
  return delta < k ? k + delta - 1 : k + 2 * delta - params.nu();
}

std::uint64_t cauchy_order_bound(std::size_t n, std::size_t k, std::size_t delta) {
  const CodeParams params{n, k, delta};
  params.validate();
  if (delta < k) return 2 * std::max(k + delta, n) + 1;
  return 2 * n * (params.nu() + 1) + 1;
}

std::size_t exponential_degree_log2(std::size_t n, std::size_t k, std::size_t delta) {
  const CodeParams params{n, k, delta};
  params.validate();
  if (delta < k) return n + k + delta - 1;
  return params.nu() * n + k - 1;
}

namespace {

void check_n_bound(const CodeParams& params) {
  const std::size_t need = required_n(params.n, params.k, params.delta);
  if (params.n < need) {
    const std::string rule = params.delta < params.k ? "n >= k+delta-1" : "n >= 2*delta+k-nu";
    throw Error(ErrorCode::NBoundViolated, rule + " required (" + std::to_string(need) + "), got n=" +
                                               std::to_string(params.n));
  }
}

std::uint64_t smallest_odd_prime_power(std::uint64_t from) {
  std::uint64_t q = std::max<std::uint64_t>(from, 3) | 1;
  while (!nt::prime_power(q)) q += 2;
  return q;
}

struct Setup {
  Field field;
  Element alpha;
  std::optional<Element> b;
  bool bound_met = true;
};

Setup setup_field(Family family, const CodeParams& params, const ConstructionOptions& options) {
  if (family == Family::Cauchy) {
    const std::uint64_t bound = cauchy_order_bound(params.n, params.k, params.delta);
    const Field field = options.field ? *options.field : Field::of_order(smallest_odd_prime_power(bound));
    const std::uint64_t q = odd_order(field);
    if (q < bound) {
      throw Error(ErrorCode::FieldTooSmall, field.name() + " is below the required order " + std::to_string(bound));
    }
    CauchyParams cp = default_cauchy_params(field);
    if (options.alpha) cp.alpha = *options.alpha;
    if (options.b) cp.b = *options.b;
    if (options.alpha || options.b) validate_cauchy_params(cp);
    return Setup{field, cp.alpha, cp.b, true};
  }

  const std::size_t log2_degree = exponential_degree_log2(params.n, params.k, params.delta);
  Field field = [&] {
    if (options.field) return *options.field;
    if (log2_degree >= 63 || (std::size_t{1} << log2_degree) > kMaxExtensionDegree) {
      throw Error(ErrorCode::FieldTooLarge, "exponential construction needs GF(2^N) with N = 2^" +
                                                std::to_string(log2_degree));
    }
    return Field::create(2, std::size_t{1} << log2_degree);
  }();
  const bool bound_met = log2_degree < 63 && field.degree() >= (std::size_t{1} << log2_degree);
  Element alpha = options.alpha ? *options.alpha : find_primitive(field);
  if (alpha.field() != field) throw Error(ErrorCode::FieldMismatch, "alpha lies in a different field");
  if (options.alpha && !is_primitive(alpha)) throw Error(ErrorCode::ParamDomain, "alpha must be primitive");
  return Setup{field, alpha, std::nullopt, bound_met};
}

}  // namespace

FieldRequirement min_field_size(Family family, std::size_t n, std::size_t k, std::size_t delta) {
  check_n_bound(CodeParams{n, k, delta});
  FieldRequirement req;
  req.family = family;
  if (family == Family::Cauchy) {
    req.q = smallest_odd_prime_power(cauchy_order_bound(n, k, delta));
  } else {
    req.log2_degree = exponential_degree_log2(n, k, delta);
    req.degree = BigInt(1) << req.log2_degree;
  }
  return req;
}

MdsCertificate verify_mds_hypotheses(const ConvCode& code, std::uint64_t minor_budget) {
  MdsCertificate cert;
  const bool low = code.delta() < code.k();
  cert.branch = low ? Branch::LowDegree : Branch::HighDegree;
  cert.n_required = required_n(code.n(), code.k(), code.delta());
  cert.n_bound_ok = code.n() >= cert.n_required;
  const CoefficientLayout layout = layout_from_code(code);
  cert.layout = is_superregular(layout.matrix, minor_budget);
  if (cert.layout.witness) {
    for (const std::size_t c : cert.layout.witness->cols) cert.layout_witness_columns.push_back(layout.labels[c]);
  }
  if (!low) {
    cert.stack_checked = code.t() == 0 ? Stack::Gbar : Stack::G2;
    cert.stack = fullsize_minors_nonzero(stacked(code, *cert.stack_checked), minor_budget);
  }
  const PolyMatrix g = code.generator();
  cert.column_reduced = is_column_reduced(g);
  try {
    cert.degree = code_degree(g);
    cert.degree_ok = cert.degree == code.delta();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RankDeficient) throw;
  }

  if (!cert.n_bound_ok) {
    cert.failing_check = "n_bound";
  } else if (!cert.layout.holds) {
    cert.failing_check = "layout";
  } else if (cert.stack && !cert.stack->holds) {
    cert.failing_check = "stack";
  } else if (!cert.column_reduced) {
    cert.failing_check = "column_reduced";
  } else if (!cert.degree_ok) {
    cert.failing_check = "degree";
  }
  cert.guaranteed = !cert.failing_check.has_value();
  return cert;
}

Construction construct_low(Family family, const CodeParams& params, const ConstructionOptions& options) {
  params.validate();
  if (params.delta >= params.k) throw Error(ErrorCode::ParamDomain, "construct_low needs delta < k");
  check_n_bound(params);
  const Setup s = setup_field(family, params, options);
  const std::size_t width = params.k + params.delta;
  const Matrix layout = family == Family::Cauchy ? cauchy_block(CauchyParams{s.alpha, *s.b}, params.n, width)
                                                 : exponential_matrix(s.alpha, params.n, width);
  ConvCode code = code_from_layout(layout, params);
  MdsCertificate cert = verify_mds_hypotheses(code, options.minor_budget);
  return Construction{std::move(code), ConstructionInfo{family, Branch::LowDegree, s.alpha, s.b, s.bound_met, "block"},
                      std::move(cert)};
}

Construction construct_high(Family family, const CodeParams& params, const ConstructionOptions& options) {
  params.validate();
  if (params.delta < params.k) throw Error(ErrorCode::ParamDomain, "construct_high needs delta >= k");
  check_n_bound(params);
  const Setup s = setup_field(family, params, options);
  const std::size_t n = params.n, k = params.k, nu = params.nu(), t = params.t();

  // Column r of G_j: rows jn .. jn+n-1 of column r of the family matrix.
  std::vector<Matrix> coeffs(params.mu() + 1, Matrix(s.field, n, k));
  for (std::size_t j = 0; j <= params.mu(); ++j) {
    for (std::size_t r = 0; r < k; ++r) {
      if (j == nu && r >= t) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = j * n + i;
        coeffs[j](i, r) = family == Family::Cauchy
                              ? cauchy_entry(CauchyParams{s.alpha, *s.b},
                                             static_cast<std::int64_t>(r) - static_cast<std::int64_t>(row))
                              : s.alpha.pow(BigInt(1) << (row + r));
      }
    }
  }
  ConvCode code(s.field, params, std::move(coeffs));
  MdsCertificate cert = verify_mds_hypotheses(code, options.minor_budget);
  const std::string reading = family == Family::Cauchy ? "cauchy-rows" : "grid-column";
  return Construction{std::move(code), ConstructionInfo{family, Branch::HighDegree, s.alpha, s.b, s.bound_met, reading},
                      std::move(cert)};
}

Construction construct(Family family, const CodeParams& params, const ConstructionOptions& options) {
  params.validate();
  return params.delta < params.k ? construct_low(family, params, options) : construct_high(family, params, options);
}

}  // namespace mdsconv
