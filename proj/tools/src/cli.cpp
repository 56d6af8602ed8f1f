#include "mdsconv/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdsconv/cli/codefile.hpp"
#include "mdsconv/constructions.hpp"
#include "mdsconv/distance.hpp"

namespace mdsconv::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw Error(ErrorCode::ParseError, "bad " + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

Budgets parse_budgets(std::string_view value) {
  Budgets b;
  const std::string text(value);
  if (text.find('=') == std::string::npos) {
    b.trellis.max_states = parse_u64(text, "MDSCONV_BUDGET");
    return b;
  }
  for (const auto& entry : split_list(text)) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "MDSCONV_BUDGET entry '" + entry + "' lacks '='");
    const std::string key = entry.substr(0, eq);
    const std::uint64_t value = parse_u64(entry.substr(eq + 1), "MDSCONV_BUDGET value");
    if (key == "minors") {
      b.minors = value;
    } else if (key == "states") {
      b.trellis.max_states = value;
    } else if (key == "transitions") {
      b.trellis.max_transitions = value;
    } else if (key == "nodes") {
      b.nodes = value;
    } else {
      throw Error(ErrorCode::ParseError, "unknown MDSCONV_BUDGET key '" + key + "'");
    }
  }
  return b;
}

Budgets budgets_from_env() {
  const char* env = std::getenv("MDSCONV_BUDGET");
  return env && *env ? parse_budgets(env) : Budgets{};
}

namespace {

struct ConstructArgs {
  std::string family;
  std::size_t n = 0, k = 0, delta = 0;
  std::optional<std::uint64_t> q, p;
  std::optional<std::size_t> degree;
  std::string modulus, factors, alpha, b, output;
};

Field field_for_construct(const ConstructArgs& a, Family family, const CodeParams& params) {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  if (a.q) {
    if (a.p || a.degree) throw Error(ErrorCode::ParamDomain, "give either --q or --p/--N, not both");
    const auto pp = nt::prime_power(*a.q);
    if (!pp) throw Error(ErrorCode::NotPrime, "q=" + std::to_string(*a.q) + " is not a prime power");
    p = pp->first;
    degree = pp->second;
  } else if (a.p || a.degree) {
    if (!a.p || !a.degree) throw Error(ErrorCode::ParamDomain, "--p and --N go together");
    p = *a.p;
    degree = *a.degree;
  } else if (family == Family::Cauchy) {
    const auto pp = *nt::prime_power(min_field_size(family, params.n, params.k, params.delta).q);
    p = pp.first;
    degree = pp.second;
  } else {
    const std::size_t log2 = min_field_size(family, params.n, params.k, params.delta).log2_degree;
    if (log2 >= 32) {
      throw Error(ErrorCode::FieldTooLarge, "exponential construction needs GF(2^N) with N = 2^" + std::to_string(log2));
    }
    p = 2;
    degree = std::size_t{1} << log2;
  }
  std::optional<std::vector<std::uint64_t>> modulus;
  if (!a.modulus.empty()) {
    modulus.emplace();
    for (const auto& c : split_list(a.modulus)) modulus->push_back(parse_u64(c, "modulus coefficient"));
  }
  std::vector<BigInt> factors;
  for (const auto& f : split_list(a.factors)) {
    parse_u64(f.substr(0, 1), "factor");  // rejects signs and junk early
    try {
      factors.emplace_back(f);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad factor '" + f + "'");
    }
  }
  return Field::create(p, degree, modulus, factors);
}

int cmd_construct(const ConstructArgs& a, const Budgets& budgets, std::ostream& out) {
  const Family family = parse_family(a.family);
  const CodeParams params{a.n, a.k, a.delta};
  params.validate();
  ConstructionOptions options;
  options.minor_budget = budgets.minors;
  options.field = field_for_construct(a, family, params);
  if (!a.alpha.empty()) options.alpha = element_from_string(*options.field, a.alpha);
  if (!a.b.empty()) {
    if (family != Family::Cauchy) throw Error(ErrorCode::ParamDomain, "--b applies to the cauchy family only");
    options.b = element_from_string(*options.field, a.b);
  }
  Construction c = construct(family, params, options);
  const json cert = certificate_to_json(c.certificate);
  const CodeFile file{c.code, std::optional<json>(construction_to_json(c.info, c.code.field())),
                      std::optional<json>(std::in_place, cert)};
  if (a.output.empty()) {
    out << serialize(code_file_to_json(file));
  } else {
    save_code_file(a.output, file);
    out << serialize(cert);
  }
  return c.certificate.guaranteed ? kExitOk : kExitNotGuaranteed;
}

json mds_json(MdsVerdict v) {
  switch (v) {
    case MdsVerdict::Yes: return true;
    case MdsVerdict::No: return false;
    case MdsVerdict::Unknown: break;
  }
  return "unknown";
}

json trellis_report(const ConvCode& code, const TrellisConfig& config) {
  const MdsResult r = is_mds(code, config);
  return json{{"free_distance", r.distance ? json(*r.distance) : json(nullptr)},
              {"mds", mds_json(r.verdict)},
              {"singleton_bound", r.bound},
              {"status", r.distance ? "exact" : "budget_exceeded"}};
}

int cmd_verify(const std::string& path, const Budgets& budgets, std::ostream& out) {
  const CodeFile file = load_code_file(path);
  const MdsCertificate cert = verify_mds_hypotheses(file.code, budgets.minors);
  const json cert_json = certificate_to_json(cert);
  json report{{"certificate", cert_json},
              {"distance", trellis_report(file.code, budgets.trellis)},
              {"file_certificate_matches", file.certificate ? json(*file.certificate == cert_json) : json(nullptr)}};
  out << serialize(report);
  return cert.guaranteed ? kExitOk : kExitNotGuaranteed;
}

int cmd_distance(const std::string& path, const std::string& method, std::optional<std::size_t> max_degree,
                 std::optional<std::uint64_t> max_states, Budgets budgets, std::ostream& out) {
  const CodeFile file = load_code_file(path);
  const ConvCode& code = file.code;
  if (max_states) budgets.trellis.max_states = *max_states;
  json report;
  if (method == "trellis") {
    report = trellis_report(code, budgets.trellis);
  } else {
    const std::size_t bound = singleton_bound(code.n(), code.k(), code.delta());
    report = json{{"singleton_bound", bound}};
    try {
      const auto r = free_distance_bruteforce(code, max_degree.value_or(code.delta() + 3), budgets.nodes);
      report["free_distance"] = r.weight;
      report["status"] = "upper_bound";
      report["mds"] = r.weight < bound ? json(false) : json("unknown");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      report["free_distance"] = nullptr;
      report["status"] = "budget_exceeded";
      report["mds"] = "unknown";
    }
  }
  out << serialize(report);
  return report["status"] == "budget_exceeded" ? kExitBudget : kExitOk;
}

int cmd_encode(const std::string& path, const std::string& input, std::ostream& out) {
  const CodeFile file = load_code_file(path);
  json j;
  try {
    j = json::parse(input);
  } catch (const json::exception&) {
    throw Error(ErrorCode::ParseError, "--input must be a JSON array of polynomials");
  }
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "--input must be a JSON array of polynomials");
  PolyVector u;
  for (const auto& p : j) u.push_back(poly_from_json(file.code.field(), p));
  const PolyVector v = encode(file.code, u);
  json codeword = json::array();
  for (const auto& p : v) codeword.push_back(poly_to_json(p));
  out << serialize(json{{"codeword", std::move(codeword)}, {"weight", weight(v)}});
  return kExitOk;
}

inline constexpr std::size_t kMaxTableRows = 10'000;

int cmd_table(std::size_t n_max, std::size_t k_max, std::size_t delta_max, bool pretty, std::ostream& out) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= n_max && count <= kMaxTableRows; ++n) count += std::min(n, k_max) * (delta_max + 1);
  if (count > kMaxTableRows) {
    throw Error(ErrorCode::ParamDomain, "table range has more than " + std::to_string(kMaxTableRows) + " rows");
  }
  json rows = json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= std::min(n, k_max); ++k) {
      for (std::size_t delta = 0; delta <= delta_max; ++delta) {
        const std::size_t need = required_n(n, k, delta);
        const bool ok = n >= need;
        json row{{"admissible", ok},
                 {"branch", delta < k ? "delta<k" : "delta>=k"},
                 {"delta", delta},
                 {"k", k},
                 {"n", n},
                 {"n_required", need},
                 {"cauchy_q", nullptr},
                 {"exponential_N", nullptr},
                 {"exponential_N_log2", nullptr}};
        if (ok) {
          row["cauchy_q"] = min_field_size(Family::Cauchy, n, k, delta).q;
          const auto e = min_field_size(Family::Exponential, n, k, delta);
          row["exponential_N_log2"] = e.log2_degree;
          row["exponential_N"] = e.degree.str();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (!pretty) {
    out << serialize(rows);
    return kExitOk;
  }
  out << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(6) << "delta" << std::setw(10) << "branch"
      << std::setw(7) << "n_req" << std::setw(11) << "admissible" << std::setw(10) << "cauchy_q" << "  exponential_N\n";
  for (const auto& r : rows) {
    out << std::setw(4) << r["n"].get<std::size_t>() << std::setw(4) << r["k"].get<std::size_t>() << std::setw(6)
        << r["delta"].get<std::size_t>() << std::setw(10) << r["branch"].get<std::string>() << std::setw(7)
        << r["n_required"].get<std::size_t>() << std::setw(11) << (r["admissible"].get<bool>() ? "yes" : "no");
    if (r["admissible"].get<bool>()) {
      out << std::setw(10) << r["cauchy_q"].get<std::uint64_t>() << "  2^" << r["exponential_N_log2"].get<std::size_t>();
    } else {
      out << std::setw(10) << "-" << "  -";
    }
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructions, certificates and distance checks for MDS convolutional codes", "mdsconv"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a code from the Cauchy or exponential family");
  construct_cmd->add_option("--family", ca.family, "cauchy or exponential")->required();
  construct_cmd->add_option("--n", ca.n)->required();
  construct_cmd->add_option("--k", ca.k)->required();
  construct_cmd->add_option("--delta", ca.delta)->required();
  construct_cmd->add_option("--q", ca.q, "Field order (prime power)");
  construct_cmd->add_option("--p", ca.p, "Characteristic");
  construct_cmd->add_option("--N", ca.degree, "Extension degree");
  construct_cmd->add_option("--modulus", ca.modulus, "Monic modulus, comma separated, low degree first");
  construct_cmd->add_option("--factors", ca.factors, "Prime factors of q-1, comma separated");
  construct_cmd->add_option("--alpha", ca.alpha, "Element repr, e.g. 2 or [0,1,0]");
  construct_cmd->add_option("--b", ca.b, "Nonsquare element repr (cauchy)");
  construct_cmd->add_option("-o,--output", ca.output, "Write the code file here instead of stdout");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check the MDS hypotheses of a code file");
  verify_cmd->add_option("file", verify_path)->required();

  std::string distance_path, method = "trellis";
  std::optional<std::size_t> max_degree;
  std::optional<std::uint64_t> max_states;
  auto* distance_cmd = app.add_subcommand("distance", "Free distance of a code file");
  distance_cmd->add_option("file", distance_path)->required();
  distance_cmd->add_option("--method", method)->check(CLI::IsMember({"trellis", "bruteforce"}));
  distance_cmd->add_option("--max-degree", max_degree, "Input degree bound for bruteforce (default delta+3)");
  distance_cmd->add_option("--max-states", max_states, "Trellis state budget");

  std::size_t bn = 0, bk = 0, bdelta = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Generalized Singleton bound");
  bound_cmd->add_option("--n", bn)->required();
  bound_cmd->add_option("--k", bk)->required();
  bound_cmd->add_option("--delta", bdelta)->required();

  std::string encode_path, encode_input;
  auto* encode_cmd = app.add_subcommand("encode", "Encode an input polynomial vector");
  encode_cmd->add_option("file", encode_path)->required();
  encode_cmd->add_option("--input", encode_input, "JSON array of k polynomials, low degree first")->required();

  std::size_t n_max = 0, k_max = 0, delta_max = 0;
  bool pretty = false;
  auto* table_cmd = app.add_subcommand("table", "Minimum field sizes over a parameter range");
  table_cmd->add_option("--n-max", n_max)->required();
  table_cmd->add_option("--k-max", k_max)->required();
  table_cmd->add_option("--delta-max", delta_max)->required();
  table_cmd->add_flag("--pretty", pretty, "Aligned text instead of JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    const Budgets budgets = budgets_from_env();
    if (construct_cmd->parsed()) return cmd_construct(ca, budgets, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_path, budgets, out);
    if (distance_cmd->parsed()) return cmd_distance(distance_path, method, max_degree, max_states, budgets, out);
    if (bound_cmd->parsed()) {
      out << singleton_bound(bn, bk, bdelta) << '\n';
      return kExitOk;
    }
    if (encode_cmd->parsed()) return cmd_encode(encode_path, encode_input, out);
    if (table_cmd->parsed()) return cmd_table(n_max, k_max, delta_max, pretty, out);
  } catch (const Error& e) {
    err << serialize(json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitBadInput;
  } catch (const json::exception& e) {
    err << serialize(json{{"error", "ParseError"}, {"message", e.what()}});
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace mdsconv::cli
