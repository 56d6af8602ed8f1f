#include "mdsconv/cli/codefile.hpp"

#include <fstream>
#include <sstream>

namespace mdsconv::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::uint64_t as_u64(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    parse_fail(what + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

json selection_to_json(const std::optional<MinorSelection>& s) {
  if (!s) return nullptr;
  return json{{"cols", s->cols}, {"rows", s->rows}};
}

// "g_{j,r}" with r 1-based, matching the usual layout notation.
json witness_labels(const std::vector<LayoutColumn>& cols) {
  if (cols.empty()) return nullptr;
  json out = json::array();
  for (const auto& c : cols) out.push_back("g_{" + std::to_string(c.degree) + "," + std::to_string(c.column + 1) + "}");
  return out;
}

}  // namespace

json element_to_json(const Element& e) {
  if (e.field().degree() == 1) return e.value();
  return e.coefficients();
}

Element element_from_json(const Field& field, const json& j) {
  const std::uint64_t p = field.characteristic();
  if (field.degree() == 1) {
    const std::uint64_t v = as_u64(j, "prime field element");
    if (v >= p) parse_fail("element " + std::to_string(v) + " out of range for " + field.name());
    return field.from_coefficients(std::vector<std::uint64_t>{v});
  }
  if (!j.is_array() || j.size() != field.degree()) {
    parse_fail("extension field element must be an array of " + std::to_string(field.degree()) + " coefficients");
  }
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    const std::uint64_t v = as_u64(c, "coefficient");
    if (v >= p) parse_fail("coefficient " + std::to_string(v) + " out of range for characteristic " + std::to_string(p));
    coeffs.push_back(v);
  }
  return field.from_coefficients(coeffs);
}

Element element_from_string(const Field& field, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    parse_fail("cannot parse element '" + text + "'");
  }
  return element_from_json(field, j);
}

json field_to_json(const Field& field) {
  json j{{"N", field.degree()}, {"modulus", field.modulus()}, {"p", field.characteristic()}};
  if (!field.supplied_factors().empty()) {
    json factors = json::array();
    for (const auto& f : field.supplied_factors()) factors.push_back(f.str());
    j["q_minus_1_factors"] = std::move(factors);
  }
  return j;
}

Field field_from_json(const json& j) {
  const std::uint64_t p = as_u64(member(j, "p"), "p");
  const std::uint64_t n = as_u64(member(j, "N"), "N");
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus")) {
    const auto& m = j.at("modulus");
    if (!m.is_array()) parse_fail("modulus must be an array");
    if (!m.empty()) {
      modulus.emplace();
      for (const auto& c : m) modulus->push_back(as_u64(c, "modulus coefficient"));
    }
  }
  std::vector<BigInt> factors;
  if (j.contains("q_minus_1_factors")) {
    for (const auto& f : j.at("q_minus_1_factors")) {
      if (!f.is_string()) parse_fail("q_minus_1_factors entries must be decimal strings");
      try {
        factors.emplace_back(f.get<std::string>());
      } catch (const std::exception&) {
        parse_fail("bad factor '" + f.get<std::string>() + "'");
      }
    }
  }
  return Field::create(p, static_cast<std::size_t>(n), modulus, factors);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(element_to_json(c));
  return out;
}

Poly poly_from_json(const Field& field, const json& j) {
  if (!j.is_array()) parse_fail("polynomial must be an array of coefficients, low degree first");
  std::vector<Element> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(field, c));
  return Poly(field, std::move(coeffs));
}

json certificate_to_json(const MdsCertificate& cert) {
  json j{{"branch", std::string(to_string(cert.branch))},
         {"column_reduced", cert.column_reduced},
         {"degree", cert.degree},
         {"degree_ok", cert.degree_ok},
         {"failing_check", cert.failing_check ? json(*cert.failing_check) : json(nullptr)},
         {"layout_minors_checked", cert.layout.minors_checked},
         {"layout_superregular", cert.layout.holds},
         {"layout_witness", selection_to_json(cert.layout.witness)},
         {"layout_witness_columns", witness_labels(cert.layout_witness_columns)},
         {"n_bound_ok", cert.n_bound_ok},
         {"n_required", cert.n_required},
         {"verdict", cert.guaranteed ? "mds_guaranteed" : "not_guaranteed"}};
  if (cert.stack) {
    j["stack"] = *cert.stack_checked == Stack::G2 ? "G2" : "Gbar";
    j["stack_fullsize_nonzero"] = cert.stack->holds;
    j["stack_witness"] = selection_to_json(cert.stack->witness);
  }
  return j;
}

json construction_to_json(const ConstructionInfo& info, const Field& field) {
  json j{{"alpha", element_to_json(info.alpha)},
         {"branch", std::string(to_string(info.branch))},
         {"family", std::string(to_string(info.family))},
         {"field_bound_met", info.field_bound_met},
         {"reading", info.reading}};
  if (info.family == Family::Cauchy) {
    j["q"] = *field.order_u64();
    j["b"] = element_to_json(*info.b);
  } else {
    j["N"] = field.degree();
    j["p"] = field.characteristic();
  }
  return j;
}

json code_file_to_json(const CodeFile& file) {
  const ConvCode& code = file.code;
  json coeffs = json::array();
  for (const auto& g : code.coefficients()) coeffs.push_back(matrix_to_json(g));
  json j{{"coeffs", std::move(coeffs)},
         {"delta", code.delta()},
         {"field", field_to_json(code.field())},
         {"k", code.k()},
         {"n", code.n()}};
  if (file.construction) j["construction"] = *file.construction;
  if (file.certificate) j["certificate"] = *file.certificate;
  return j;
}

CodeFile code_file_from_json(const json& j) {
  if (!j.is_object()) parse_fail("code file must be a JSON object");
  const Field field = field_from_json(member(j, "field"));
  const CodeParams params{as_u64(member(j, "n"), "n"), as_u64(member(j, "k"), "k"), as_u64(member(j, "delta"), "delta")};
  params.validate();
  const json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) parse_fail("coeffs must be an array of matrices");
  std::vector<Matrix> mats;
  for (const auto& g : coeffs) {
    if (!g.is_array() || g.size() != params.n) parse_fail("each coefficient matrix needs n rows");
    Matrix m(field, params.n, params.k);
    for (std::size_t i = 0; i < params.n; ++i) {
      if (!g[i].is_array() || g[i].size() != params.k) parse_fail("each coefficient row needs k entries");
      for (std::size_t c = 0; c < params.k; ++c) m(i, c) = element_from_json(field, g[i][c]);
    }
    mats.push_back(std::move(m));
  }
  CodeFile file{ConvCode(field, params, std::move(mats)), std::nullopt, std::nullopt};
  if (j.contains("construction")) file.construction = j.at("construction");
  if (j.contains("certificate")) file.certificate = j.at("certificate");
  return file;
}

std::string serialize(const json& j) { return j.dump() + "\n"; }

CodeFile load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  try {
    return code_file_from_json(j);
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void save_code_file(const std::filesystem::path& path, const CodeFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot write " + path.string());
  out << serialize(code_file_to_json(file));
}

}  // namespace mdsconv::cli
