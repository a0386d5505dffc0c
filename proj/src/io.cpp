#include "eqsym/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#define TOML_HEADER_ONLY 1
#include "toml.hpp"

#include "eqsym/corpus.hpp"

namespace eqsym::io {

namespace {

Json from_toml(const toml::node& n) {
  if (auto t = n.as_table()) {
    Json out = Json::object();
    for (auto&& [k, v] : *t) out[std::string(k.str())] = from_toml(v);
    return out;
  }
  if (auto a = n.as_array()) {
    Json out = Json::array();
    for (auto&& v : *a) out.push_back(from_toml(v));
    return out;
  }
  if (auto s = n.as_string()) return Json(s->get());
  if (auto i = n.as_integer()) return Json(i->get());
  if (auto b = n.as_boolean()) return Json(b->get());
  if (n.is_floating_point())
    throw InputError(std::to_string(n.source().begin.line) + ":" + std::to_string(n.source().begin.column),
                     "floating-point values are not accepted; write rationals as \"p/q\" strings");
  throw InputError(std::to_string(n.source().begin.line), "unsupported TOML value");
}

std::string at(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object()) throw InputError(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(at(field, key), "missing field");
  return *it;
}

std::size_t as_count(const Json& n, const std::string& field) {
  if (!n.is_number_integer() || n.get<long long>() < 0)
    throw InputError(field, "expected a non-negative integer");
  return n.get<std::size_t>();
}

std::vector<std::size_t> as_count_list(const Json& n, const std::string& field) {
  if (!n.is_array()) throw InputError(field, "expected an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(as_count(n[i], at(field, i)));
  return out;
}

template <class F>
auto guarded(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(field, e.what());
  } catch (const std::domain_error& e) {
    throw InputError(field, e.what());
  }
}

std::vector<Matrix> generator_matrices(const Json& node, const FiniteGroup& g, const std::string& field) {
  std::vector<Matrix> out;
  const auto& names = g.generator_names();
  if (node.is_array()) {
    if (node.size() != names.size())
      throw InputError(field, "expected " + std::to_string(names.size()) + " generator matrices");
    for (std::size_t i = 0; i < node.size(); ++i) out.push_back(parse_matrix(node[i], at(field, i)));
  } else if (node.is_object()) {
    for (const auto& n : names) out.push_back(parse_matrix(require(node, n, field), at(field, n)));
    if (node.size() != names.size()) throw InputError(field, "unknown generator name among keys");
  } else {
    throw InputError(field, "expected a list of matrices or an object keyed by generator name");
  }
  return out;
}

}  // namespace

Json parse_document(const std::string& text, const std::string& origin) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      // locate the byte offset as line:column
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col), e.what());
    }
  }
  try {
    toml::table t = toml::parse(text, origin);
    return from_toml(t);
  } catch (const toml::parse_error& e) {
    throw InputError(origin + ":" + std::to_string(e.source().begin.line) + ":" +
                         std::to_string(e.source().begin.column),
                     std::string(e.description()));
  }
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Rational parse_rational_node(const Json& node, const std::string& field) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (node.is_string()) return guarded(field, [&] { return parse_rational(node.get<std::string>()); });
  throw InputError(field, "expected an integer or a \"p/q\" string");
}

Matrix parse_matrix(const Json& node, const std::string& field) {
  if (!node.is_array()) throw InputError(field, "expected a list of rows");
  std::vector<Vector> rows;
  std::size_t cols = node.empty() ? 0 : (node[0].is_array() ? node[0].size() : 0);
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& r = node[i];
    if (!r.is_array() || r.size() != cols) throw InputError(at(field, i), "rows must have equal length");
    Vector row;
    for (std::size_t j = 0; j < r.size(); ++j) row.push_back(parse_rational_node(r[j], at(at(field, i), j)));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows, cols);
}

GroupPtr parse_group(const Json& node, const std::string& field) {
  if (node.is_string())
    return guarded(field, [&] { return group_by_name(node.get<std::string>()); });
  if (!node.is_object()) throw InputError(field, "expected a group name or object");
  if (node.contains("name") && !node.contains("family"))
    return parse_group(node["name"], at(field, "name"));
  const Json& fam = require(node, "family", field);
  if (!fam.is_string()) throw InputError(at(field, "family"), "expected a string");
  std::string f = fam.get<std::string>();
  return guarded(field, [&]() -> GroupPtr {
    if (f == "cyclic") return cyclic_group(as_count(require(node, "order", field), at(field, "order")));
    if (f == "dihedral") return dihedral_group(as_count(require(node, "order", field), at(field, "order")));
    if (f == "semidihedral")
      return semidihedral_group(as_count(require(node, "order", field), at(field, "order")));
    if (f == "quaternion")
      return quaternion_group(as_count(require(node, "order", field), at(field, "order")));
    if (f == "product")
      return product_group(as_count_list(require(node, "factors", field), at(field, "factors")));
    if (f == "table") {
      const Json& t = require(node, "table", field);
      if (!t.is_array()) throw InputError(at(field, "table"), "expected a list of rows");
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t i = 0; i < t.size(); ++i) table.push_back(as_count_list(t[i], at(at(field, "table"), i)));
      auto gens = as_count_list(require(node, "generators", field), at(field, "generators"));
      std::vector<std::string> names;
      if (node.contains("names"))
        for (const auto& n : node["names"]) names.push_back(n.get<std::string>());
      return FiniteGroup::from_table(std::move(table), std::move(gens), {Family::custom, {}}, std::move(names));
    }
    if (f == "permutation") {
      const Json& gs = require(node, "generators", field);
      if (!gs.is_array()) throw InputError(at(field, "generators"), "expected a list of permutations");
      std::vector<std::vector<std::size_t>> perms;
      for (std::size_t i = 0; i < gs.size(); ++i)
        perms.push_back(as_count_list(gs[i], at(at(field, "generators"), i)));
      return permutation_group(perms);
    }
    throw InputError(at(field, "family"), "unknown family '" + f + "'");
  });
}

Document read_document(const Json& doc) {
  Document d;
  d.raw = doc;
  if (!doc.is_object()) throw InputError("", "document must be an object/table");
  if (doc.contains("schema_version")) {
    const Json& v = doc["schema_version"];
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
      throw InputError("schema_version", "unsupported schema version (expected " +
                                             std::to_string(kSchemaVersion) + ")");
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::vector<std::string> known = {"schema_version", "group", "cover", "module",
                                                   "representations", "config"};
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw InputError(it.key(), "unknown section");
  }
  d.group = parse_group(require(doc, "group", ""), "group");
  const auto& g = *d.group;

  if (doc.contains("cover")) {
    const Json& c = doc["cover"];
    CoverSpec spec;
    spec.group = d.group;
    spec.base_genus = as_count(require(c, "genus", "cover"), "cover.genus");
    const Json& m = require(c, "monodromy", "cover");
    if (!m.is_array()) throw InputError("cover.monodromy", "expected a list of words");
    std::vector<std::optional<std::size_t>> assignment(g.generators().begin(), g.generators().end());
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::string field = at("cover.monodromy", i);
      if (m[i].is_number_integer()) {
        std::size_t idx = as_count(m[i], field);
        if (idx >= g.order()) throw InputError(field, "element index out of range");
        spec.monodromy.push_back(idx);
      } else if (m[i].is_string()) {
        spec.monodromy.push_back(guarded(field, [&] {
          return eval_word(g, parse_word(m[i].get<std::string>(), g.generator_names()), assignment);
        }));
      } else {
        throw InputError(field, "expected a word or an element index");
      }
    }
    if (spec.monodromy.size() != 2 * spec.base_genus)
      throw InputError("cover.monodromy", "expected " + std::to_string(2 * spec.base_genus) + " entries");
    d.cover = std::move(spec);
  }

  if (doc.contains("module")) {
    const Json& m = doc["module"];
    Matrix omega = parse_matrix(require(m, "omega", "module"), "module.omega");
    auto gens = generator_matrices(require(m, "generators", "module"), g, "module.generators");
    d.module = guarded("module", [&] { return SymplecticGModule::from_generators(d.group, omega, gens); });
  }
  if (!d.cover && !d.module) throw InputError("", "document needs a cover or a module section");

  if (doc.contains("representations")) {
    const Json& rs = doc["representations"];
    if (!rs.is_array()) throw InputError("representations", "expected a list");
    std::vector<RationalRep> reps;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::string field = at("representations", i);
      std::string label = rs[i].contains("label") ? rs[i]["label"].get<std::string>() : "rep" + std::to_string(i);
      std::optional<std::size_t> endo;
      if (rs[i].contains("endo_dim")) endo = as_count(rs[i]["endo_dim"], at(field, "endo_dim"));
      auto gens = generator_matrices(require(rs[i], "generators", field), g, at(field, "generators"));
      reps.push_back(guarded(field, [&] { return RationalRep::from_generators(d.group, gens, label, endo); }));
    }
    d.representations = std::move(reps);
  }

  if (doc.contains("config")) {
    const Json& c = doc["config"];
    if (!c.is_object()) throw InputError("config", "expected an object");
    if (c.contains("seed")) d.config.seed = as_count(c["seed"], "config.seed");
    if (c.contains("height_bound")) d.config.height_bound = as_count(c["height_bound"], "config.height_bound");
    if (c.contains("max_iterations"))
      d.config.max_iterations = as_count(c["max_iterations"], "config.max_iterations");
    if (c.contains("strategies")) {
      const Json& s = c["strategies"];
      if (!s.is_array()) throw InputError("config.strategies", "expected a list of names");
      d.config.strategies.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        d.config.strategies.push_back(
            guarded(at("config.strategies", i), [&] { return parse_strategy(s[i].get<std::string>()); }));
    }
    guarded("config", [&] {
      d.config.validate();
      return 0;
    });
  }
  return d;
}

SymplecticGModule document_module(const Document& d) {
  if (d.cover) return symplectic_module_of_cover(build_cover(*d.cover));
  return *d.module;
}

Json rational_json(const Rational& r) { return to_pq_string(r); }

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Json group_json(const FiniteGroup& g) {
  Json legend = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) legend.push_back(g.element_name(a));
  Json gens = Json::array();
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    gens.push_back({{"name", g.generator_names()[i]}, {"element", g.generators()[i]}});
  return Json{{"description", g.describe()},
              {"family", family_name(g.tag().family)},
              {"order", g.order()},
              {"generators", gens},
              {"legend", legend}};
}

Json certificate_json(const LagrangianCertificate& c) {
  return Json{{"dimension", c.lagrangian.dim()},
              {"ambient_dimension", c.lagrangian.ambient_dim()},
              {"basis", matrix_json(c.lagrangian.basis())},
              {"checks",
               {{"dimension", c.checks.dimension},
                {"isotropic", c.checks.isotropic},
                {"invariant", c.checks.invariant}}},
              {"provenance", c.provenance}};
}

Json failure_json(const CertificateFailure& f) {
  return Json{{"property", f.property},
              {"detail", f.detail},
              {"witness_a", vector_json(f.witness_a)},
              {"witness_b", vector_json(f.witness_b)}};
}

Json search_json(const SearchResult& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(
        {{"label", b.label}, {"dimension", b.dim}, {"strategy", b.strategy}, {"iterations", b.iterations}});
  Json out{{"found", r.ok()}, {"message", r.message}, {"blocks", blocks}};
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  return out;
}

Matrix certificate_basis(const Json& doc, std::size_t ambient) {
  const Json* node = &doc;
  std::string field;
  if (doc.contains("outputs") && doc["outputs"].contains("certificate")) {
    node = &doc["outputs"]["certificate"];
    field = "outputs.certificate";
  } else if (doc.contains("certificate")) {
    node = &doc["certificate"];
    field = "certificate";
  }
  Matrix b = parse_matrix(require(*node, "basis", field), at(field, "basis"));
  if (b.rows() == 0) return Matrix(0, ambient);
  if (b.cols() != ambient)
    throw InputError(at(field, "basis"), "basis vectors have length " + std::to_string(b.cols()) +
                                             ", module has dimension " + std::to_string(ambient));
  return b;
}

}  // namespace eqsym::io
