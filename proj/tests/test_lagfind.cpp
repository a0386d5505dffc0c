#include "doctest.h"

#include <set>

#include "eqsym/corpus.hpp"
#include "eqsym/lagfind.hpp"
#include "oracles.hpp"

using namespace eqsym;

namespace {

SymplecticGModule rotation_module() {
  return SymplecticGModule::from_generators(cyclic_group(4), SymplecticGModule::standard_form(1),
                                            {Matrix{{0, -1}, {1, 0}}});
}

SymplecticGModule zero_module(GroupPtr g) {
  std::vector<Matrix> gens(g->generators().size(), Matrix(0, 0));
  return SymplecticGModule::from_generators(g, Matrix(0, 0), gens);
}

SymplecticGModule cover_module(std::size_t h, GroupPtr g, std::vector<std::size_t> m) {
  return symplectic_module_of_cover(build_cover(CoverSpec{h, std::move(g), std::move(m)}));
}

}  // namespace

TEST_CASE("rationals by height") {
  auto r = rationals_up_to_height(2);
  std::vector<Rational> expect{0, 1, -1, 2, -2, make_rational(1, 2), make_rational(-1, 2)};
  CHECK(r == expect);
  for (std::size_t h = 1; h <= 6; ++h) {
    auto v = rationals_up_to_height(h);
    std::set<std::string> seen;
    for (const auto& x : v) {
      CHECK(rational_height(x) <= std::max<std::size_t>(h, 1));
      seen.insert(to_pq_string(x));
    }
    CHECK(seen.size() == v.size());
  }
}

TEST_CASE("height enumerator covers every vector once") {
  for (std::uint64_t seed : {0u, 7u}) {
    HeightEnumerator it(2, 2, seed);
    std::set<std::string> seen;
    Vector v;
    std::size_t last_height = 1;
    while (it.next(v)) {
      CHECK_FALSE(is_zero_vector(v));
      std::size_t ht = 0;
      for (const auto& x : v) ht = std::max(ht, rational_height(x));
      CHECK(ht >= last_height);
      last_height = ht;
      seen.insert(to_pq_string(v[0]) + "," + to_pq_string(v[1]));
    }
    // 7 values per coordinate, minus the zero vector
    CHECK(seen.size() == 48);
  }
  HeightEnumerator a(3, 2, 5), b(3, 2, 5);
  Vector x, y;
  for (int i = 0; i < 50; ++i) {
    a.next(x);
    b.next(y);
    CHECK(x == y);
  }
}

TEST_CASE("isotypic block examples") {
  auto t = cyclic_group(1);
  auto q2 = SymplecticGModule::from_generators(t, SymplecticGModule::standard_form(1),
                                               {Matrix::identity(2)});
  auto b0 = isotypic_blocks(q2, catalog_reps(t));
  REQUIRE(b0.blocks.size() == 1);
  CHECK(b0.blocks[0].space == Subspace::full(2));

  auto c2 = cyclic_group(2);
  auto b1 = isotypic_blocks(cover_module(1, c2, {1, 0}), catalog_reps(c2));
  CHECK(b1.blocks[0].space.dim() == 2);
  CHECK(b1.blocks[1].space.dim() == 0);

  auto b2 = isotypic_blocks(cover_module(2, c2, {1, 0, 0, 0}), catalog_reps(c2));
  CHECK(b2.blocks[0].space.dim() == 4);
  CHECK(b2.blocks[1].space.dim() == 2);
  CHECK(b2.certified_orthogonal);
}

TEST_CASE("find examples") {
  SearchConfig cfg;
  auto t = cyclic_group(1);
  auto q2 = SymplecticGModule::from_generators(t, SymplecticGModule::standard_form(1),
                                               {Matrix::identity(2)});
  auto r0 = find_invariant_lagrangian(q2, std::nullopt, cfg);
  REQUIRE(r0.ok());
  CHECK(r0.certificate->lagrangian == Subspace::span(Matrix{{1, 0}}));

  auto v = cover_module(2, cyclic_group(2), {1, 0, 0, 0});
  auto r1 = find_invariant_lagrangian(v, std::nullopt, cfg);
  REQUIRE(r1.ok());
  CHECK(r1.certificate->lagrangian.dim() == 3);
  CHECK(oracle::is_invariant_lagrangian(v, r1.certificate->lagrangian));

  SearchConfig wide;
  wide.height_bound = 10;
  auto r2 = find_invariant_lagrangian(rotation_module(), std::nullopt, wide);
  CHECK_FALSE(r2.ok());
  CHECK(r2.message.rfind("exhausted", 0) == 0);
  // same rotation over a table-defined C4, which has no catalog
  auto perm = permutation_group({{1, 2, 3, 0}});
  auto bare = SymplecticGModule::from_generators(perm, SymplecticGModule::standard_form(1),
                                                 {Matrix{{0, -1}, {1, 0}}});
  auto r3 = find_invariant_lagrangian(bare, std::nullopt, wide);
  CHECK_FALSE(r3.ok());
  REQUIRE(r3.blocks.size() == 1);
  CHECK(r3.blocks[0].label == "whole");
}

TEST_CASE("each strategy alone") {
  auto v = cover_module(2, dihedral_group(8), {1, 4, 3, 4});
  for (auto s : {Strategy::orbit_reduce, Strategy::enumerate}) {
    SearchConfig cfg;
    cfg.strategies = {Strategy::field_symplectic, s};
    auto r = find_invariant_lagrangian(v, std::nullopt, cfg);
    REQUIRE(r.ok());
    CHECK(oracle::is_invariant_lagrangian(v, r.certificate->lagrangian));
  }
  SearchConfig only_field;
  only_field.strategies = {Strategy::field_symplectic};
  CHECK_FALSE(find_invariant_lagrangian(v, std::nullopt, only_field).ok());
}

TEST_CASE("search is deterministic and seeds are honoured") {
  auto v = cover_module(2, quaternion_group(8), {1, 4, 3, 4});
  SearchConfig cfg;
  cfg.seed = 9;
  auto a = find_invariant_lagrangian(v, std::nullopt, cfg);
  auto b = find_invariant_lagrangian(v, std::nullopt, cfg);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(a.certificate->lagrangian == b.certificate->lagrangian);
  CHECK(a.certificate->provenance == b.certificate->provenance);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    cfg.seed = seed;
    auto r = find_invariant_lagrangian(v, std::nullopt, cfg);
    REQUIRE(r.ok());
    CHECK(oracle::is_invariant_lagrangian(v, r.certificate->lagrangian));
  }
}

TEST_CASE("a tiny iteration budget exhausts instead of guessing") {
  auto v = cover_module(2, quaternion_group(8), {1, 4, 3, 4});
  SearchConfig cfg;
  cfg.max_iterations = 1;
  cfg.height_bound = 1;
  auto r = find_invariant_lagrangian(v, std::nullopt, cfg);
  if (!r.ok()) CHECK(r.message.find("exhausted") == 0);
  else CHECK(oracle::is_invariant_lagrangian(v, r.certificate->lagrangian));
}

TEST_CASE("config validation") {
  SearchConfig c;
  c.height_bound = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.strategies.clear();
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_strategy("orbit_reduce") == Strategy::orbit_reduce);
  CHECK_THROWS_AS(parse_strategy("guess"), std::invalid_argument);
}

TEST_CASE("witt examples") {
  SearchConfig cfg;
  auto v = cover_module(2, cyclic_group(2), {1, 0, 0, 0});
  auto self = witt_equivalent(v, v, cfg);
  REQUIRE(self.equivalent);
  CHECK(oracle::is_invariant_lagrangian(self.sum, self.search.certificate->lagrangian));

  auto w = cover_module(2, cyclic_group(2), {0, 1, 1, 1});
  auto pair = witt_equivalent(v, w, cfg);
  REQUIRE(pair.equivalent);
  CHECK(oracle::is_invariant_lagrangian(pair.sum, pair.search.certificate->lagrangian));

  SearchConfig wide;
  wide.height_bound = 6;
  auto rot = witt_equivalent(rotation_module(), zero_module(cyclic_group(4)), wide);
  CHECK_FALSE(rot.equivalent);
  CHECK(rot.search.message.rfind("exhausted", 0) == 0);

  CHECK_THROWS_AS(witt_equivalent(v, rotation_module(), cfg), std::invalid_argument);
}

TEST_CASE("transverse partners for found Lagrangians") {
  for (const auto& cc : cover_corpus(3, 2)) {
    if (cc.spec.group->order() > 8) continue;
    CAPTURE(cc.name);
    auto v = symplectic_module_of_cover(build_cover(cc.spec));
    auto r = find_invariant_lagrangian(v, std::nullopt, SearchConfig{});
    REQUIRE(r.ok());
    auto m = transverse_invariant_lagrangian(v, r.certificate->lagrangian);
    CHECK(oracle::is_invariant_lagrangian(v, m.lagrangian));
    CHECK(oracle::transverse(r.certificate->lagrangian, m.lagrangian));
  }
}
