#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqsym/cover.hpp"

namespace eqsym {

/// Group by short name: C<n>, D<order>, Q<order>, SD<order>, S3, C2xC2.
GroupPtr group_by_name(const std::string& name);

struct CorpusCase {
  std::string name;
  std::string group_name;
  CoverSpec spec;
  bool random = false;
};

/// Monodromy images given as words in the group's generator names.
CoverSpec cover_from_words(const GroupPtr& g, std::size_t genus, const std::vector<std::string>& words);

/// A surjective monodromy satisfying the surface relation, drawn by
/// picking all images but the last uniformly and solving for the last
/// among elements that close the relation. Retries until one generates.
std::vector<std::size_t> random_monodromy(const GroupPtr& g, std::size_t genus, std::mt19937_64& rng);

/// Fixed covers over C2, C3, C4, C8, C2xC2, D8, D16, Q8, SD16, S3 with base
/// genus 1-3, followed by `random_cases` seeded random ones.
std::vector<CorpusCase> cover_corpus(std::uint64_t seed = 0, std::size_t random_cases = 5);

/// rho factoring through H < G: the cover over G (disconnected) and the
/// connected cover over H, with H's embedding into G.
struct InductionCase {
  std::string name;
  CoverSpec over_g;
  CoverSpec over_h;
  std::vector<std::size_t> embedding;
};
std::vector<InductionCase> induction_cases();

/// Pairs of covers with the same group and base genus.
struct CoverPair {
  std::string name;
  CoverSpec first, second;
};
std::vector<CoverPair> same_genus_pairs();

}  // namespace eqsym
