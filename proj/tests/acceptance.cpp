// Acceptance gate: one PASS/FAIL line per criterion. Every certificate is
// re-checked with the independent oracles in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "eqsym/corpus.hpp"
#include "eqsym/lagfind.hpp"
#include "oracles.hpp"

using namespace eqsym;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// every invariant Lagrangian the suites produce, with its module
std::vector<std::pair<SymplecticGModule, Subspace>> produced;

struct CorpusRun {
  CorpusCase c;
  SymplecticGModule module;
};
std::vector<CorpusRun> corpus;

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome corpus_suite() {
  auto cases = cover_corpus(0, 5);
  std::size_t random = 0, certified = 0;
  double worst = 0;
  for (const auto& c : cases) {
    random += c.random;
    auto t0 = std::chrono::steady_clock::now();
    auto v = symplectic_module_of_cover(build_cover(c.spec));
    auto r = find_invariant_lagrangian(v, std::nullopt, SearchConfig{});
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    corpus.push_back({c, v});
    if (!r.ok()) return fail(c.name + ": " + r.message);
    if (!oracle::is_invariant_lagrangian(v, r.certificate->lagrangian)) return fail(c.name + ": oracle rejects");
    produced.emplace_back(v, r.certificate->lagrangian);
    ++certified;
  }
  if (cases.size() < 20 || random < 5) return fail("corpus too small");
  if (worst > 60) return fail("a case took over 60 s");
  return {true, std::to_string(certified) + "/" + std::to_string(cases.size()) + " certified, " +
                    std::to_string(random) + " random, slowest " + std::to_string(worst).substr(0, 5) + " s"};
}

Outcome chevalley_weil_suite() {
  std::size_t checked = 0;
  for (const auto& [c, v] : corpus) {
    const auto& g = *c.spec.group;
    const long expect_e = 2 + (2 * static_cast<long>(c.spec.base_genus) - 2) * static_cast<long>(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      Rational want = a == g.identity() ? expect_e : 2;
      if (v.action(a).trace() != want) return fail(c.name + ": trace at " + g.element_name(a));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " traces over " + std::to_string(corpus.size()) + " covers"};
}

Outcome form_suite() {
  for (const auto& [c, v] : corpus) {
    if (!oracle::is_skew_nondegenerate(v.omega())) return fail(c.name + ": form");
    const auto& g = *c.spec.group;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (!oracle::preserves(v.omega(), v.action(a))) return fail(c.name + ": not invariant");
      for (std::size_t b = 0; b < g.order(); ++b)
        if (!(v.action(a) * v.action(b) == v.action(g.mul(a, b)))) return fail(c.name + ": not a homomorphism");
    }
  }
  return {true, std::to_string(corpus.size()) + " modules skew, nondegenerate, invariant"};
}

Outcome karoubi_suite() {
  oracle::Gen gen(2024);
  auto pool = oracle::reduction_pool();
  std::size_t nontrivial = 0;
  for (int t = 0; t < 100; ++t) {
    auto inst = oracle::reduction_instance(pool, gen);
    nontrivial += inst.i.dim() + inst.j.dim() > 0;
    auto k = karoubi_lagrangian(inst.module, inst.i, inst.j);
    if (!oracle::is_invariant_lagrangian(k.module, k.certificate.lagrangian))
      return fail("instance " + std::to_string(t));
    produced.emplace_back(k.module, k.certificate.lagrangian);
  }
  return {true, "100 instances, " + std::to_string(nontrivial) + " with I or J nonzero"};
}

Outcome induction_suite() {
  std::size_t ok = 0;
  for (const auto& ic : induction_cases()) {
    auto over_g = symplectic_module_of_cover(build_cover(ic.over_g, CoverOptions{false}));
    auto over_h = symplectic_module_of_cover(build_cover(ic.over_h));
    auto ind = induction(over_h, ic.over_g.group, ic.embedding);
    auto w = witt_equivalent(over_g, ind, SearchConfig{});
    if (!w.equivalent) return fail(ic.name + ": " + w.search.message);
    if (!oracle::is_invariant_lagrangian(w.sum, w.search.certificate->lagrangian)) return fail(ic.name + ": oracle");
    produced.emplace_back(w.sum, w.search.certificate->lagrangian);
    ++ok;
  }
  if (ok < 5) return fail("fewer than 5 cases");
  return {true, std::to_string(ok) + " induced pairs Witt-equivalent"};
}

Outcome pairs_suite() {
  std::size_t ok = 0;
  for (const auto& p : same_genus_pairs()) {
    if (p.first.monodromy == p.second.monodromy) return fail(p.name + ": identical monodromy");
    auto a = symplectic_module_of_cover(build_cover(p.first));
    auto b = symplectic_module_of_cover(build_cover(p.second));
    auto w = witt_equivalent(a, b, SearchConfig{});
    if (!w.equivalent) return fail(p.name + ": " + w.search.message);
    if (!oracle::is_invariant_lagrangian(w.sum, w.search.certificate->lagrangian)) return fail(p.name + ": oracle");
    produced.emplace_back(w.sum, w.search.certificate->lagrangian);
    ++ok;
  }
  if (ok < 5) return fail("fewer than 5 pairs");
  return {true, std::to_string(ok) + " pairs Witt-equivalent"};
}

Outcome transverse_suite() {
  for (std::size_t i = 0; i < produced.size(); ++i) {
    const auto& [v, l] = produced[i];
    auto m = transverse_invariant_lagrangian(v, l);
    if (!oracle::is_invariant_lagrangian(v, m.lagrangian) || !oracle::transverse(l, m.lagrangian))
      return fail("Lagrangian " + std::to_string(i));
  }
  return {true, std::to_string(produced.size()) + " Lagrangians have invariant transverse partners"};
}

Outcome rep_suite() {
  std::size_t groups = 0;
  oracle::Gen gen(8);
  for (const auto& g : oracle::catalog_groups()) {
    auto reps = catalog_reps(g);
    const std::string n = g->describe();
    for (const auto& r : reps) {
      for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < g->order(); ++b)
          if (!(r.matrix(a) * r.matrix(b) == r.matrix(g->mul(a, b)))) return fail(n + ": " + r.label());
      if (commutant_dim(r) != *r.endo_dim()) return fail(n + ": endo_dim of " + r.label());
    }
    Rational count = 0;
    for (const auto& r : reps) count += Rational(static_cast<long>(r.dim() * r.dim())) / static_cast<long>(*r.endo_dim());
    if (count != static_cast<long>(g->order())) return fail(n + ": dimension identity");
    auto idem = central_idempotents(g, reps);
    GroupAlgebraElement total(g);
    for (std::size_t i = 0; i < idem.size(); ++i) {
      total = total + idem[i];
      for (std::size_t j = 0; j < idem.size(); ++j) {
        auto p = idem[i] * idem[j];
        if (i == j ? !(p == idem[i]) : !p.is_zero()) return fail(n + ": idempotents");
      }
    }
    if (!(total == GroupAlgebraElement::one(g))) return fail(n + ": idempotents incomplete");
    std::vector<GroupAlgebraElement> probes;
    for (std::size_t a = 0; a < g->order(); a += std::max<std::size_t>(1, g->order() / 4))
      probes.push_back(GroupAlgebraElement::basis_element(g, a));
    std::vector<Rational> c;
    for (std::size_t a = 0; a < g->order(); ++a) c.push_back(gen.rational());
    probes.emplace_back(g, c);
    if (oracle::adjoint_trace_failure(g, reps, idem, probes) != -1) return fail(n + ": adjoint trace");
    ++groups;
  }
  return {true, std::to_string(groups) + " groups"};
}

Outcome fox_suite() {
  std::size_t checks = 0;
  for (const auto& [c, v] : corpus) {
    auto reps = catalog_reps(c.spec.group);
    auto idem = central_idempotents(c.spec.group, reps);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      auto d = twisted_homology_dims(c.spec, reps[i]);
      std::size_t block = oracle::rank_of(idem[i].apply(v.actions()));
      if (block != d.h1 * reps[i].dim() / *reps[i].endo_dim()) return fail(c.name + ": " + reps[i].label());
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " (cover, rep) pairs"};
}

Outcome negative_control() {
  auto v = SymplecticGModule::from_generators(cyclic_group(4), SymplecticGModule::standard_form(1),
                                              {Matrix{{0, -1}, {1, 0}}});
  SearchConfig cfg;
  cfg.height_bound = 10;
  auto r = find_invariant_lagrangian(v, std::nullopt, cfg);
  if (r.ok()) return fail("engine produced a certificate for the rotation module");
  std::size_t it = 0;
  for (const auto& b : r.blocks) it += b.iterations;
  return {true, "exhausted at height 10 after " + std::to_string(it) + " candidates"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cover corpus certified", corpus_suite},
      {"Chevalley-Weil traces", chevalley_weil_suite},
      {"form sanity", form_suite},
      {"Karoubi Lagrangians on random reductions", karoubi_suite},
      {"transverse invariant partners", transverse_suite},
      {"induction compatibility", induction_suite},
      {"same-genus cover pairs", pairs_suite},
      {"representation identities", rep_suite},
      {"Fox cross-check", fox_suite},
      {"C4 rotation negative control", negative_control},
  };
  // criterion 5 consumes what 4, 6 and 7 produce
  const std::vector<std::size_t> order{0, 1, 2, 3, 5, 6, 4, 7, 8, 9};
  std::vector<Outcome> results(criteria.size());
  for (auto i : order) {
    try {
      results[i] = criteria[i].second();
    } catch (const std::exception& e) {
      results[i] = fail(std::string("exception: ") + e.what());
    }
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::printf("%s %2zu %s: %s\n", results[i].pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                results[i].detail.c_str());
    failed += !results[i].pass;
  }
  return failed ? 1 : 0;
}
