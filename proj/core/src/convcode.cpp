#include "mdsconv/convcode.hpp"

#include <algorithm>
#include <numeric>

namespace mdsconv {

void CodeParams::validate() const {
  if (k == 0 || k > n) {
    throw Error(ErrorCode::ParamDomain,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

ConvCode::ConvCode(Field field, CodeParams params, std::vector<Matrix> coeffs)
    : field_(std::move(field)), params_(params), coeffs_(std::move(coeffs)) {
  params_.validate();
  const std::size_t n = params_.n, k = params_.k, t = params_.t(), nu = params_.nu();
  if (coeffs_.size() != params_.mu() + 1) {
    throw Error(ErrorCode::ShapeError, "expected " + std::to_string(params_.mu() + 1) +
                                           " coefficient matrices, got " + std::to_string(coeffs_.size()));
  }
  for (const auto& g : coeffs_) {
    if (g.rows() != n || g.cols() != k) throw Error(ErrorCode::ShapeError, "coefficient matrices must be n x k");
    if (g.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient matrix over a different field");
  }
  if (t > 0) {
    const Matrix& top = coeffs_[nu];
    for (std::size_t j = t; j < k; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!top(i, j).is_zero()) {
          throw Error(ErrorCode::ColumnDegreeMismatch,
                      "column " + std::to_string(j + 1) + " must have degree " + std::to_string(nu - 1));
        }
      }
    }
  }
  // Nominal highest-degree coefficients; full rank also pins every column
  // degree to its nominal value.
  Matrix nominal(field_, n, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix& src = coeffs_[params_.column_degree(j)];
    for (std::size_t i = 0; i < n; ++i) nominal(i, j) = src(i, j);
  }
  if (rank(nominal) < k) throw Error(ErrorCode::NotColumnReduced, "highest column degree coefficient matrix is singular");
}

PolyMatrix ConvCode::generator() const { return PolyMatrix::from_coefficients(coeffs_); }

std::vector<LayoutColumn> layout_labels(const CodeParams& params) {
  std::vector<LayoutColumn> labels;
  for (std::size_t r = 0; r < params.k; ++r) {
    for (std::size_t d = 0; d <= params.column_degree(r); ++d) labels.push_back({d, r});
  }
  return labels;
}

CoefficientLayout layout_from_code(const ConvCode& code) {
  auto labels = layout_labels(code.params());
  Matrix m(code.field(), code.n(), labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const Matrix& src = code.coefficients()[labels[c].degree];
    for (std::size_t i = 0; i < code.n(); ++i) m(i, c) = src(i, labels[c].column);
  }
  return CoefficientLayout{std::move(m), std::move(labels)};
}

ConvCode code_from_layout(const Matrix& layout, const CodeParams& params) {
  params.validate();
  const auto labels = layout_labels(params);
  if (layout.rows() != params.n || layout.cols() != labels.size()) {
    throw Error(ErrorCode::ShapeError, "layout must be " + std::to_string(params.n) + " x " +
                                           std::to_string(labels.size()));
  }
  std::vector<Matrix> coeffs(params.mu() + 1, Matrix(layout.field(), params.n, params.k));
  for (std::size_t c = 0; c < labels.size(); ++c) {
    Matrix& dst = coeffs[labels[c].degree];
    for (std::size_t i = 0; i < params.n; ++i) dst(i, labels[c].column) = layout(i, c);
  }
  return ConvCode(layout.field(), params, std::move(coeffs));
}

Matrix hcm(const PolyMatrix& g) {
  Matrix out(g.field(), g.rows(), g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    const int d = g.column_degree(j);
    if (d < 0) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j + 1) + " is zero");
    for (std::size_t i = 0; i < g.rows(); ++i) out(i, j) = g(i, j).coeff(static_cast<std::size_t>(d));
  }
  return out;
}

bool is_column_reduced(const PolyMatrix& g) {
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (g.column_degree(j) < 0) return false;
  }
  return rank(hcm(g)) == g.cols();
}

namespace {

// The i-th element in canonical order, also for fields with q >= 2^64.
Element nth_element(const Field& field, std::uint64_t i) {
  if (field.order_u64()) return field.from_index(i);
  std::vector<std::uint64_t> digits;
  while (i > 0) {
    digits.push_back(i % field.characteristic());
    i /= field.characteristic();
  }
  if (digits.empty()) digits.push_back(0);
  return field.from_coefficients(digits);
}

}  // namespace

std::size_t code_degree(const PolyMatrix& g, DegreeMethod method) {
  const std::size_t n = g.rows(), k = g.cols();
  if (n < k) throw Error(ErrorCode::ShapeError, "full-size minors need rows >= cols");

  std::size_t bound = 0;  // every full-size minor has degree <= sum of column degrees
  for (std::size_t j = 0; j < k; ++j) bound += static_cast<std::size_t>(std::max(g.column_degree(j), 0));

  const bool enough_points = g.field().order() > bound;
  if (method == DegreeMethod::Auto) method = enough_points ? DegreeMethod::Interpolation : DegreeMethod::Elimination;
  if (method == DegreeMethod::Interpolation && !enough_points) {
    throw Error(ErrorCode::FieldTooSmall, "field has too few points to interpolate minors of degree " +
                                              std::to_string(bound));
  }

  std::vector<Element> points;
  std::vector<Matrix> evaluated;
  if (method == DegreeMethod::Interpolation) {
    for (std::uint64_t i = 0; i <= bound; ++i) {
      points.push_back(nth_element(g.field(), i));
      evaluated.push_back(g.evaluate(points.back()));
    }
  }

  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  int best = -1;
  while (true) {
    Poly det(g.field());
    if (method == DegreeMethod::Interpolation) {
      std::vector<Element> values;
      values.reserve(points.size());
      for (const auto& m : evaluated) values.push_back(minor(m, rows, cols));
      det = interpolate(points, values);
    } else {
      det = determinant_bareiss(g.select_rows(rows));
    }
    best = std::max(best, det.degree());

    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  if (best < 0) throw Error(ErrorCode::RankDeficient, "every full-size minor vanishes");
  return static_cast<std::size_t>(best);
}

PolyVector encode(const ConvCode& code, const PolyVector& u) {
  if (u.size() != code.k()) {
    throw Error(ErrorCode::DimensionMismatch, "input must have " + std::to_string(code.k()) + " entries");
  }
  int input_degree = -1;
  for (const auto& p : u) {
    if (p.field() != code.field()) throw Error(ErrorCode::FieldMismatch, "input over a different field");
    input_degree = std::max(input_degree, p.degree());
  }
  const Field& field = code.field();
  PolyVector v(code.n(), Poly(field));
  if (input_degree < 0) return v;

  const auto& g = code.coefficients();
  const std::size_t length = static_cast<std::size_t>(input_degree) + code.mu() + 1;
  std::vector<std::vector<Element>> out(code.n(), std::vector<Element>(length, field.zero()));
  // v_i = sum_j G_j u_{i-j}
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = 0; j <= code.mu() && j <= i; ++j) {
      const std::size_t l = i - j;
      if (l > static_cast<std::size_t>(input_degree)) continue;
      for (std::size_t c = 0; c < code.k(); ++c) {
        const Element ul = u[c].coeff(l);
        if (ul.is_zero()) continue;
        for (std::size_t r = 0; r < code.n(); ++r) out[r][i] += g[j](r, c) * ul;
      }
    }
  }
  for (std::size_t r = 0; r < code.n(); ++r) v[r] = Poly(field, std::move(out[r]));
  return v;
}

Matrix stacked(const ConvCode& code, Stack which) {
  const auto& g = code.coefficients();
  std::vector<Matrix> blocks;
  switch (which) {
    case Stack::Gbar:
      blocks = g;
      break;
    case Stack::G2:
      blocks.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(code.nu()));
      break;
    case Stack::G1:
      blocks = g;
      if (blocks.size() < code.nu() + 1) blocks.emplace_back(code.field(), code.n(), code.k());
      break;
  }
  return vstack(blocks);
}

}  // namespace mdsconv
