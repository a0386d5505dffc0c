#include "eqsym/corpus.hpp"

#include <stdexcept>

namespace eqsym {

GroupPtr group_by_name(const std::string& name) {
  auto num = [&](std::size_t skip) { return static_cast<std::size_t>(std::stoul(name.substr(skip))); };
  if (name == "S3") return dihedral_group(6);
  if (name == "C2xC2") return product_group({2, 2});
  if (name.rfind("SD", 0) == 0) return semidihedral_group(num(2));
  if (name.rfind("C", 0) == 0) return cyclic_group(num(1));
  if (name.rfind("D", 0) == 0) return dihedral_group(num(1));
  if (name.rfind("Q", 0) == 0) return quaternion_group(num(1));
  throw std::invalid_argument("unknown group name " + name);
}

CoverSpec cover_from_words(const GroupPtr& g, std::size_t genus, const std::vector<std::string>& words) {
  CoverSpec spec{genus, g, {}};
  std::vector<std::optional<std::size_t>> assignment(g->generators().begin(), g->generators().end());
  for (const auto& w : words)
    spec.monodromy.push_back(eval_word(*g, parse_word(w, g->generator_names()), assignment));
  return spec;
}

std::vector<std::size_t> random_monodromy(const GroupPtr& g, std::size_t genus, std::mt19937_64& rng) {
  const std::size_t n = g->order();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::size_t> m(2 * genus);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) m[i] = rng() % n;
    std::vector<std::size_t> closing;
    for (std::size_t b = 0; b < n; ++b) {
      m.back() = b;
      if (satisfies_surface_relation({genus, g, m}) && generates(*g, m)) closing.push_back(b);
    }
    if (closing.empty()) continue;
    m.back() = closing[rng() % closing.size()];
    return m;
  }
  throw std::runtime_error("random_monodromy: no surjective monodromy found for " + g->describe());
}

std::vector<CorpusCase> cover_corpus(std::uint64_t seed, std::size_t random_cases) {
  struct Fixed {
    const char* group;
    std::size_t genus;
    std::vector<std::string> words;
  };
  const std::vector<Fixed> fixed = {
      {"C2", 1, {"x", "e"}},
      {"C2", 2, {"x", "e", "e", "e"}},
      {"C2", 3, {"x", "e", "e", "x", "x", "e"}},
      {"C3", 1, {"x", "e"}},
      {"C3", 2, {"x", "x", "x^2", "e"}},
      {"C4", 1, {"x", "x"}},
      {"C4", 2, {"x", "e", "e", "x^3"}},
      {"C4", 3, {"x", "e", "e", "e", "e", "x"}},
      {"C8", 1, {"x", "x^3"}},
      {"C8", 2, {"x", "e", "x^2", "x"}},
      {"C2xC2", 1, {"x", "y"}},
      {"C2xC2", 2, {"x", "e", "y", "e"}},
      {"D8", 2, {"x", "y", "x^3", "y"}},
      {"D8", 3, {"x", "y", "x^3", "y", "y", "e"}},
      {"D16", 2, {"x", "y", "x^7", "y"}},
      {"D16", 3, {"x", "y", "x^7", "y", "e", "e"}},
      {"Q8", 2, {"x", "y", "x^3", "y"}},
      {"Q8", 3, {"x", "y", "e", "e", "x^3", "y"}},
      {"SD16", 2, {"x", "y", "x^7", "y"}},
      {"S3", 2, {"x", "y", "x^2", "y"}},
      {"S3", 3, {"x", "e", "e", "y", "e", "e"}},
  };
  std::vector<CorpusCase> out;
  for (const auto& f : fixed) {
    auto g = group_by_name(f.group);
    std::string name = std::string(f.group) + "/h" + std::to_string(f.genus);
    for (const auto& w : f.words) name += (&w == &f.words.front() ? ":" : ",") + w;
    out.push_back({name, f.group, cover_from_words(g, f.genus, f.words), false});
  }
  const std::vector<const char*> pool = {"C4", "C2xC2", "S3", "D8", "Q8", "C3", "C8", "SD16", "D16"};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_cases; ++k) {
    const char* gname = pool[rng() % pool.size()];
    auto g = group_by_name(gname);
    auto m = random_monodromy(g, 2, rng);
    std::string name = "random" + std::to_string(k) + "/" + gname + "/h2:";
    for (std::size_t i = 0; i < m.size(); ++i) name += (i ? "," : "") + g->element_name(m[i]);
    out.push_back({name, gname, CoverSpec{2, g, m}, true});
  }
  return out;
}

std::vector<InductionCase> induction_cases() {
  struct Fixed {
    const char* group;
    std::size_t genus;
    std::vector<std::string> words;
  };
  const std::vector<Fixed> fixed = {
      {"C4", 1, {"x^2", "e"}},
      {"D8", 1, {"x", "e"}},
      {"C2xC2", 2, {"x", "e", "e", "e"}},
      {"S3", 1, {"x", "x"}},
      {"Q8", 2, {"x", "e", "x", "x"}},
      {"C8", 1, {"x^2", "x^2"}},
      {"D8", 1, {"x^2", "y"}},
  };
  std::vector<InductionCase> out;
  for (const auto& f : fixed) {
    auto g = group_by_name(f.group);
    CoverSpec over_g = cover_from_words(g, f.genus, f.words);
    Subgroup h = subgroup_generated(*g, over_g.monodromy);
    std::vector<std::size_t> local(g->order(), g->order());
    for (std::size_t i = 0; i < h.embedding.size(); ++i) local[h.embedding[i]] = i;
    CoverSpec over_h{f.genus, h.group, {}};
    for (auto m : over_g.monodromy) over_h.monodromy.push_back(local[m]);
    std::string name = std::string(f.group) + "/h" + std::to_string(f.genus) + " from order " +
                       std::to_string(h.embedding.size());
    out.push_back({name, over_g, over_h, h.embedding});
  }
  return out;
}

std::vector<CoverPair> same_genus_pairs() {
  struct Fixed {
    const char* group;
    std::size_t genus;
    std::vector<std::string> a, b;
  };
  const std::vector<Fixed> fixed = {
      {"C2", 2, {"x", "e", "e", "e"}, {"e", "x", "x", "x"}},
      {"C3", 2, {"x", "e", "e", "e"}, {"x", "x", "x^2", "e"}},
      {"C4", 2, {"x", "e", "e", "e"}, {"x", "x", "x", "x^3"}},
      {"C2xC2", 1, {"x", "y"}, {"y", "x"}},
      {"S3", 2, {"x", "y", "x^2", "y"}, {"y", "x", "y", "x^2"}},
      {"D8", 2, {"x", "y", "x^3", "y"}, {"y", "x", "y", "x^3"}},
      {"Q8", 2, {"x", "y", "x^3", "y"}, {"x", "e", "e", "y"}},
  };
  std::vector<CoverPair> out;
  for (const auto& f : fixed) {
    auto g = group_by_name(f.group);
    out.push_back({std::string(f.group) + "/h" + std::to_string(f.genus), cover_from_words(g, f.genus, f.a),
                   cover_from_words(g, f.genus, f.b)});
  }
  return out;
}

}  // namespace eqsym
