#pragma once

#include <cstddef>
#include <vector>

#include "mdsconv/linalg.hpp"
#include "mdsconv/poly.hpp"

namespace mdsconv {

/// Rate k/n, degree delta, and the quantities derived from them.
struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;

  /// Number of columns of the larger degree: delta - k*floor(delta/k).
  std::size_t t() const { return delta % k; }
  /// floor(delta/k) + 1
  std::size_t nu() const { return delta / k + 1; }
  /// Degree of G(z): nu if k does not divide delta, nu-1 otherwise.
  std::size_t mu() const { return t() == 0 ? nu() - 1 : nu(); }
  /// Column degree of column j (0-based): nu for j < t, nu-1 after.
  std::size_t column_degree(std::size_t j) const { return j < t() ? nu() : nu() - 1; }

  /// Throws ParamDomain unless 1 <= k <= n.
  void validate() const;

  bool operator==(const CodeParams&) const = default;
};

/// An (n,k,delta) convolutional code given by G(z) = sum_i G_i z^i.
///
/// Column degrees are fixed to the non-increasing pattern nu (t times) then
/// nu-1 (k-t times), and G(z) must be column reduced. The constructor checks
/// both and rejects anything else.
class ConvCode {
 public:
  /// Throws ParamDomain, ShapeError, FieldMismatch, ColumnDegreeMismatch,
  /// NotColumnReduced.
  ConvCode(Field field, CodeParams params, std::vector<Matrix> coeffs);

  const Field& field() const { return field_; }
  const CodeParams& params() const { return params_; }
  std::size_t n() const { return params_.n; }
  std::size_t k() const { return params_.k; }
  std::size_t delta() const { return params_.delta; }
  std::size_t t() const { return params_.t(); }
  std::size_t nu() const { return params_.nu(); }
  std::size_t mu() const { return params_.mu(); }

  /// G_0 .. G_mu.
  const std::vector<Matrix>& coefficients() const { return coeffs_; }
  PolyMatrix generator() const;

  bool operator==(const ConvCode& other) const = default;

 private:
  Field field_;
  CodeParams params_;
  std::vector<Matrix> coeffs_;
};

/// Label of one layout column: coefficient of z^degree in column `column`
/// (0-based) of G(z).
struct LayoutColumn {
  std::size_t degree = 0;
  std::size_t column = 0;
  bool operator==(const LayoutColumn&) const = default;
};

/// The n x (k*nu + t) matrix of coefficient columns
/// [g_{0,1} .. g_{nu,1} | ... | g_{0,k} .. g_{nu-1,k}].
struct CoefficientLayout {
  Matrix matrix;
  std::vector<LayoutColumn> labels;
};

/// Column order of the layout for the given parameters.
std::vector<LayoutColumn> layout_labels(const CodeParams& params);

CoefficientLayout layout_from_code(const ConvCode& code);

/// Inverse of layout_from_code. Throws ShapeError, NotColumnReduced.
ConvCode code_from_layout(const Matrix& layout, const CodeParams& params);

/// Highest column degree coefficient matrix. Throws ZeroColumn.
Matrix hcm(const PolyMatrix& g);

bool is_column_reduced(const PolyMatrix& g);

enum class DegreeMethod {
  Auto,           ///< interpolation when the field has enough points, else elimination
  Interpolation,  ///< evaluate minors at distinct points and interpolate
  Elimination,    ///< fraction-free elimination over F[z]
};

/// Maximum degree of the full-size minors of g. Throws RankDeficient when
/// every full-size minor vanishes, ShapeError when rows < cols, and
/// FieldTooSmall when interpolation is forced on a field with too few points.
std::size_t code_degree(const PolyMatrix& g, DegreeMethod method = DegreeMethod::Auto);

/// v(z) = G(z) u(z). Throws DimensionMismatch, FieldMismatch.
PolyVector encode(const ConvCode& code, const PolyVector& u);

enum class Stack {
  G1,    ///< (G_0; ..; G_nu), a zero block appended when k divides delta
  G2,    ///< (G_0; ..; G_{nu-1})
  Gbar,  ///< (G_0; ..; G_mu)
};

Matrix stacked(const ConvCode& code, Stack which);

}  // namespace mdsconv
