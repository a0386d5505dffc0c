#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqsym/cover.hpp"
#include "eqsym/lagfind.hpp"

namespace eqsym::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

/// Malformed input. `where` is a field path such as cover.monodromy[2] or
/// a line:column position for syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// JSON if the first non-blank character is '{', TOML otherwise.
Json parse_document(const std::string& text, const std::string& origin);
Json load_document(const std::string& path);

/// A parsed input document.
struct Document {
  Json raw;
  GroupPtr group;
  std::optional<CoverSpec> cover;
  std::optional<SymplecticGModule> module;
  std::optional<std::vector<RationalRep>> representations;
  SearchConfig config;
};
Document read_document(const Json& doc);

GroupPtr parse_group(const Json& node, const std::string& field);
Rational parse_rational_node(const Json& node, const std::string& field);
Matrix parse_matrix(const Json& node, const std::string& field);

/// The module a document describes: the cover's H^1 if it has a cover
/// section, else its explicit module section.
SymplecticGModule document_module(const Document& d);

Json rational_json(const Rational& r);
Json vector_json(std::span<const Rational> v);
Json matrix_json(const Matrix& m);
Json group_json(const FiniteGroup& g);
Json certificate_json(const LagrangianCertificate& c);
Json failure_json(const CertificateFailure& f);
Json search_json(const SearchResult& r);

/// Reads the basis rows of a certificate, accepting either a report with
/// outputs.certificate or a bare certificate object.
Matrix certificate_basis(const Json& doc, std::size_t ambient);

}  // namespace eqsym::io
