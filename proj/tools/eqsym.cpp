// eqsym: command-line driver for covers, invariant Lagrangians and Witt tests.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "eqsym/corpus.hpp"
#include "eqsym/io.hpp"

using namespace eqsym;
using io::Json;

namespace {

enum Exit { kPass = 0, kNegative = 1, kInputError = 2 };

struct Common {
  std::vector<std::string> inputs;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> height_bound, max_iterations;
  std::optional<std::string> strategies;
};

void add_search_flags(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Seed for randomized search and corpus sampling (default 0)");
  app->add_option("--height-bound", c.height_bound, "Largest numerator/denominator in candidate vectors");
  app->add_option("--max-iterations", c.max_iterations, "Candidate budget per strategy and block");
  app->add_option("--strategies", c.strategies,
                  "Comma-separated subset of field_symplectic,orbit_reduce,enumerate");
}

SearchConfig merged_config(SearchConfig cfg, const Common& c) {
  if (c.seed) cfg.seed = *c.seed;
  if (c.height_bound) cfg.height_bound = *c.height_bound;
  if (c.max_iterations) cfg.max_iterations = *c.max_iterations;
  if (c.strategies) {
    cfg.strategies.clear();
    std::stringstream ss(*c.strategies);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.strategies.push_back(parse_strategy(item));
  }
  cfg.validate();
  return cfg;
}

Json config_json(const SearchConfig& cfg) {
  Json s = Json::array();
  for (auto x : cfg.strategies) s.push_back(strategy_name(x));
  return Json{{"seed", cfg.seed},
              {"height_bound", cfg.height_bound},
              {"max_iterations", cfg.max_iterations},
              {"strategies", s}};
}

Json trace_table(const SymplecticGModule& v, std::size_t genus, bool& all_ok) {
  const auto& g = *v.group();
  Json rows = Json::array();
  all_ok = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Rational expect = a == g.identity()
                          ? Rational(2 + (2 * static_cast<long>(genus) - 2) * static_cast<long>(g.order()))
                          : Rational(2);
    Rational got = v.action(a).trace();
    all_ok = all_ok && got == expect;
    rows.push_back({{"element", a},
                    {"name", g.element_name(a)},
                    {"trace", io::rational_json(got)},
                    {"expected", io::rational_json(expect)},
                    {"ok", got == expect}});
  }
  return rows;
}

Json cover_outputs(const CoverComplex& c, const SymplecticGModule& v, bool& traces_ok) {
  Json gens = Json::array();
  for (auto s : v.group()->generators()) gens.push_back(io::matrix_json(v.action(s)));
  return Json{{"cells",
               {{"vertices", c.vertex_count()}, {"edges", c.edge_count()}, {"triangles", c.triangle_count()}}},
              {"euler_characteristic", c.euler_characteristic()},
              {"components", c.components()},
              {"module_dimension", v.dim()},
              {"traces", trace_table(v, c.spec().base_genus, traces_ok)},
              {"module", {{"omega", io::matrix_json(v.omega())}, {"generators", gens}}}};
}

struct Run {
  std::string command;
  Json input = nullptr;
  GroupPtr group;
  std::uint64_t seed = 0;
  Json outputs = Json::object();
  std::string verdict = "pass";
};

int emit(const Run& r, const Common& c, std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  Json report{{"artifact", "eqsym"},
              {"artifact_version", io::kArtifactVersion},
              {"schema_version", io::kSchemaVersion},
              {"command", r.command},
              {"seed", r.seed},
              {"input", r.input}};
  if (r.group) report["group"] = io::group_json(*r.group);
  report["outputs"] = r.outputs;
  report["verdict"] = r.verdict;
  report["timing_ms"] = ms.count();
  std::string text = report.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw io::InputError(c.output, "cannot write output file");
    out << text;
  }
  return r.verdict == "pass" ? kPass : kNegative;
}

io::Document single_input(const Common& c) {
  if (c.inputs.size() != 1) throw io::InputError("--input", "exactly one input document is required");
  return io::read_document(io::load_document(c.inputs[0]));
}

int cmd_cover(const Common& c, Run& run) {
  auto d = single_input(c);
  if (!d.cover) throw io::InputError("cover", "the cover command needs a cover section");
  run.input = d.raw;
  run.group = d.group;
  auto complex = build_cover(*d.cover);
  auto v = symplectic_module_of_cover(complex);
  bool ok = false;
  run.outputs = cover_outputs(complex, v, ok);
  run.verdict = ok ? "pass" : "fail";
  return 0;
}

int cmd_find(const Common& c, Run& run) {
  auto d = single_input(c);
  auto cfg = merged_config(d.config, c);
  run.input = d.raw;
  run.group = d.group;
  run.seed = cfg.seed;
  auto v = io::document_module(d);
  auto r = find_invariant_lagrangian(v, d.representations, cfg);
  run.outputs = io::search_json(r);
  run.outputs["module_dimension"] = v.dim();
  run.outputs["config"] = config_json(cfg);
  run.verdict = r.ok() ? "pass" : "exhausted";
  return 0;
}

int cmd_verify(const Common& c, const std::string& certificate_path, Run& run) {
  Json cert = io::load_document(certificate_path);
  if (c.inputs.empty() && !cert.contains("input"))
    throw io::InputError("--input", "no input document given and the certificate carries none");
  io::Document d = c.inputs.empty() ? io::read_document(cert["input"]) : single_input(c);
  run.input = d.raw;
  run.group = d.group;
  auto v = io::document_module(d);
  Matrix basis = io::certificate_basis(cert, v.dim());
  Subspace l = basis.rows() ? Subspace::span(basis) : Subspace::zero(v.dim());
  if (l.dim() != basis.rows())
    throw io::InputError("certificate.basis", "basis rows are linearly dependent");
  auto res = verify_certificate(v, l);
  run.outputs["module_dimension"] = v.dim();
  if (res.ok()) {
    run.outputs["certificate"] = io::certificate_json(*res.certificate);
    run.verdict = "pass";
  } else {
    run.outputs["failure"] = io::failure_json(*res.failure);
    run.verdict = "fail";
  }
  return 0;
}

int cmd_witt(const Common& c, Run& run) {
  if (c.inputs.size() != 2) throw io::InputError("--input", "witt-equiv needs two --input documents");
  auto a = io::read_document(io::load_document(c.inputs[0]));
  auto b = io::read_document(io::load_document(c.inputs[1]));
  auto cfg = merged_config(a.config, c);
  run.input = Json::array({a.raw, b.raw});
  run.group = a.group;
  run.seed = cfg.seed;
  auto va = io::document_module(a);
  auto vb = io::document_module(b);
  if (!same_group(*va.group(), *vb.group()))
    throw io::InputError("group", "the two documents describe different groups");
  auto w = witt_equivalent(va, vb, cfg, a.representations);
  run.outputs = io::search_json(w.search);
  run.outputs["equivalent"] = w.equivalent;
  run.outputs["dimensions"] = Json::array({va.dim(), vb.dim()});
  run.outputs["config"] = config_json(cfg);
  run.verdict = w.equivalent ? "pass" : "exhausted";
  return 0;
}

int cmd_chevalley_weil(const Common& c, Run& run) {
  auto d = single_input(c);
  if (!d.cover) throw io::InputError("cover", "chevalley-weil needs a cover section");
  run.input = d.raw;
  run.group = d.group;
  auto v = symplectic_module_of_cover(build_cover(*d.cover));
  bool traces_ok = false;
  run.outputs["traces"] = trace_table(v, d.cover->base_genus, traces_ok);
  bool fox_ok = true;
  std::optional<std::vector<RationalRep>> reps = d.representations;
  if (!reps) {
    try {
      reps = catalog_reps(d.group);
    } catch (const std::invalid_argument&) {
    }
  }
  if (reps) {
    auto idem = central_idempotents(d.group, *reps);
    Json rows = Json::array();
    for (std::size_t i = 0; i < reps->size(); ++i) {
      const auto& r = (*reps)[i];
      std::size_t block = rank(idem[i].apply(v.actions()));
      auto t = twisted_homology_dims(*d.cover, r);
      std::size_t endo = r.endo_dim() ? *r.endo_dim() : commutant_dim(r);
      bool ok = block * endo == t.h1 * r.dim();
      fox_ok = fox_ok && ok;
      rows.push_back({{"label", r.label()},
                      {"dimension", r.dim()},
                      {"endo_dimension", endo},
                      {"block_dimension", block},
                      {"twisted_h0", t.h0},
                      {"twisted_h1", t.h1},
                      {"twisted_h2", t.h2},
                      {"ok", ok}});
    }
    run.outputs["blocks"] = rows;
  }
  run.verdict = traces_ok && fox_ok ? "pass" : "fail";
  return 0;
}

int cmd_corpus(const Common& c, std::size_t jobs, Run& run) {
  SearchConfig cfg = merged_config(SearchConfig{}, c);
  run.seed = cfg.seed;
  auto cases = cover_corpus(cfg.seed);
  std::vector<Json> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < cases.size();) {
      auto start = std::chrono::steady_clock::now();
      const auto& cs = cases[k];
      Json row{{"case", k}, {"name", cs.name}, {"group", cs.group_name}, {"genus", cs.spec.base_genus}};
      try {
        auto v = symplectic_module_of_cover(build_cover(cs.spec));
        bool cw = false;
        trace_table(v, cs.spec.base_genus, cw);
        auto r = find_invariant_lagrangian(v, std::nullopt, cfg);
        bool verified = r.ok() && verify_certificate(v, r.certificate->lagrangian).ok();
        row["dimension"] = v.dim();
        row["found"] = r.ok();
        row["verified"] = verified;
        row["chevalley_weil"] = cw;
        row["pass"] = verified && cw;
      } catch (const std::exception& e) {
        row["error"] = e.what();
        row["pass"] = false;
      }
      row["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      rows[k] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  bool all = true;
  Json table = Json::array();
  for (auto& r : rows) {
    all = all && r["pass"].get<bool>();
    table.push_back(std::move(r));
  }
  run.outputs["cases"] = table;
  run.outputs["config"] = config_json(cfg);
  run.verdict = all ? "pass" : "fail";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant symplectic structure on H1 of Galois covers of surfaces"};
  app.require_subcommand(1);
  Common common;
  std::string certificate;
  std::size_t jobs = 1;

  auto* cover = app.add_subcommand("cover", "Build a cover; report cells, Euler characteristic, traces");
  auto* find = app.add_subcommand("find-lagrangian", "Search for and certify a G-invariant Lagrangian");
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a spec");
  auto* witt = app.add_subcommand("witt-equiv", "Test Witt equivalence of two covers or modules");
  auto* cw = app.add_subcommand("chevalley-weil", "Trace identity and Fox-calculus block check");
  auto* corpus = app.add_subcommand("corpus", "Run the built-in cover corpus");
  for (auto* sc : {cover, find, verify, witt, cw, corpus}) {
    sc->add_option("--output", common.output, "Write the report here instead of standard output");
  }
  for (auto* sc : {cover, find, verify, witt, cw})
    sc->add_option("--input", common.inputs, "Input document (JSON or TOML); witt-equiv takes two");
  verify->add_option("--certificate", certificate, "Certificate or find-lagrangian report")->required();
  corpus->add_option("--jobs", jobs, "Parallel workers");
  for (auto* sc : {find, witt, corpus}) add_search_flags(sc, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  auto start = std::chrono::steady_clock::now();
  Run run;
  try {
    if (cover->parsed()) {
      run.command = "cover";
      cmd_cover(common, run);
    } else if (find->parsed()) {
      run.command = "find-lagrangian";
      cmd_find(common, run);
    } else if (verify->parsed()) {
      run.command = "verify";
      cmd_verify(common, certificate, run);
    } else if (witt->parsed()) {
      run.command = "witt-equiv";
      cmd_witt(common, run);
    } else if (cw->parsed()) {
      run.command = "chevalley-weil";
      cmd_chevalley_weil(common, run);
    } else {
      run.command = "corpus";
      cmd_corpus(common, jobs, run);
    }
    return emit(run, common, start);
  } catch (const io::InputError& e) {
    Json err{{"artifact", "eqsym"},
             {"schema_version", io::kSchemaVersion},
             {"command", run.command},
             {"verdict", "input-error"},
             {"error", {{"where", e.where()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "eqsym: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    Json err{{"artifact", "eqsym"},
             {"schema_version", io::kSchemaVersion},
             {"command", run.command},
             {"verdict", "input-error"},
             {"error", {{"where", ""}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "eqsym: " << e.what() << "\n";
    return kInputError;
  }
}
