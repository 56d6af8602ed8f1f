#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mdsconv/constructions.hpp"
#include "mdsconv/convcode.hpp"
#include "mdsconv/poly.hpp"

namespace mdsconv::cli {

using json = nlohmann::json;

/// Integer for prime fields, little-endian coefficient array otherwise.
json element_to_json(const Element& e);
/// Throws ParseError on a malformed or out-of-range representation.
Element element_from_json(const Field& field, const json& j);
/// Parses a flag value such as "5" or "[1,0,1]".
Element element_from_string(const Field& field, const std::string& text);

json field_to_json(const Field& field);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& field, const json& j);

json certificate_to_json(const MdsCertificate& cert);
json construction_to_json(const ConstructionInfo& info, const Field& field);

/// A code plus the optional blocks written by `construct`. The blocks are
/// carried through unchanged so load followed by save is byte-identical.
struct CodeFile {
  ConvCode code;
  std::optional<json> construction;
  std::optional<json> certificate;
};

json code_file_to_json(const CodeFile& file);
/// Throws ParseError and any validation error from the code constructor.
CodeFile code_file_from_json(const json& j);

/// Compact form with sorted keys and a trailing newline.
std::string serialize(const json& j);

CodeFile load_code_file(const std::filesystem::path& path);
void save_code_file(const std::filesystem::path& path, const CodeFile& file);

}  // namespace mdsconv::cli
