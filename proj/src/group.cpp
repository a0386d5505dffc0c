#include "eqsym/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace eqsym {

std::string family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::semidihedral: return "semidihedral";
    case Family::quaternion: return "quaternion";
    case Family::product: return "product";
    case Family::custom: return "custom";
  }
  return "custom";
}

namespace {

std::string power_name(const std::string& gen, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

std::string join_word(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += " ";
    out += p;
  }
  return out.empty() ? "e" : out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Elements x^i y^j with x of order m, y x y^-1 = x^r and y^2 = x^s.
GroupPtr metacyclic(std::size_t m, std::size_t r, std::size_t s, FamilyTag tag) {
  const std::size_t order = 2 * m;
  if (order > kMaxGroupOrder) throw std::invalid_argument("group order exceeds cap");
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t ai = a % m, aj = a / m;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t bi = b % m, bj = b / m;
      // y^aj x^bi = x^(r^aj * bi) y^aj
      std::size_t twisted = aj ? (r * bi) % m : bi;
      std::size_t i = (ai + twisted) % m;
      std::size_t j = aj + bj;
      if (j == 2) {
        i = (i + s) % m;
        j = 0;
      }
      table[a][b] = i + m * j;
    }
  }
  return FiniteGroup::from_table(std::move(table), {1 % order, m}, std::move(tag), {"x", "y"});
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table,
                                 std::vector<std::size_t> generators, FamilyTag tag,
                                 std::vector<std::string> generator_names) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds cap of 256");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  auto g = std::make_shared<FiniteGroup>();
  g->order_ = n;
  g->mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g->mul_[a * n + b] = static_cast<std::uint16_t>(table[a][b]);

  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g->mul(e, a) == a && g->mul(a, e) == a;
    if (ok) id = e;
  }
  if (!id) throw std::invalid_argument("group table has no identity element");
  g->identity_ = *id;

  g->inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->mul(a, b) == g->identity_ && g->mul(b, a) == g->identity_) {
        g->inv_[a] = b;
        break;
      }
    }
    if (g->inv_[a] == n)
      throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");

  for (auto s : generators)
    if (s >= n) throw std::invalid_argument("generator index out of range");
  if (generator_names.empty())
    for (std::size_t k = 0; k < generators.size(); ++k)
      generator_names.push_back("g" + std::to_string(k + 1));
  if (generator_names.size() != generators.size())
    throw std::invalid_argument("generator name count mismatch");
  g->generators_ = std::move(generators);
  g->generator_names_ = std::move(generator_names);
  g->tag_ = std::move(tag);

  // Element names.
  g->names_.assign(n, "");
  const auto& p = g->tag_.params;
  switch (g->tag_.family) {
    case Family::cyclic:
      for (std::size_t i = 0; i < n; ++i) g->names_[i] = join_word({power_name("x", i)});
      break;
    case Family::dihedral:
    case Family::semidihedral:
    case Family::quaternion: {
      const std::size_t m = n / 2;
      for (std::size_t a = 0; a < n; ++a)
        g->names_[a] = join_word({power_name("x", a % m), power_name("y", a / m)});
      break;
    }
    case Family::product: {
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::string> parts;
        std::size_t rest = a;
        for (std::size_t k = 0; k < p.size(); ++k) {
          parts.push_back(power_name(g->generator_names_[k], rest % p[k]));
          rest /= p[k];
        }
        g->names_[a] = join_word(parts);
      }
      break;
    }
    case Family::custom: {
      // Shortest words by breadth-first search over the generators.
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> queue{g->identity_};
      seen[g->identity_] = true;
      g->names_[g->identity_] = "e";
      while (!queue.empty()) {
        auto a = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < g->generators_.size(); ++k) {
          auto b = g->mul(a, g->generators_[k]);
          if (seen[b]) continue;
          seen[b] = true;
          g->names_[b] = a == g->identity_ ? g->generator_names_[k]
                                           : g->names_[a] + " " + g->generator_names_[k];
          queue.push_back(b);
        }
      }
      for (std::size_t a = 0; a < n; ++a)
        if (!seen[a]) g->names_[a] = "#" + std::to_string(a);
      break;
    }
  }
  return g;
}

std::size_t FiniteGroup::pow(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  std::size_t r = identity_;
  for (unsigned long i = 0; i < e % element_order(a); ++i) r = mul(r, base);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<std::size_t> FiniteGroup::find_element(const std::string& name) const {
  for (std::size_t a = 0; a < order_; ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

std::string FiniteGroup::describe() const {
  std::ostringstream os;
  os << family_name(tag_.family);
  if (!tag_.params.empty()) {
    os << "(";
    for (std::size_t k = 0; k < tag_.params.size(); ++k) os << (k ? "," : "") << tag_.params[k];
    os << ")";
  }
  os << " of order " << order_;
  return os.str();
}

GroupPtr cyclic_group(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds cap");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(table), {1 % n}, {Family::cyclic, {n}}, {"x"});
}

GroupPtr dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("dihedral group needs an even order >= 4");
  const std::size_t m = order / 2;
  return metacyclic(m, m - 1, 0, {Family::dihedral, {order}});
}

GroupPtr semidihedral_group(std::size_t order) {
  if (!is_power_of_two(order) || order < 16)
    throw std::invalid_argument("semidihedral group needs order 2^n with n >= 4");
  const std::size_t m = order / 2;
  return metacyclic(m, m / 2 - 1, 0, {Family::semidihedral, {order}});
}

GroupPtr quaternion_group(std::size_t order) {
  if (!is_power_of_two(order) || order < 8)
    throw std::invalid_argument("quaternion group needs order 2^n with n >= 3");
  const std::size_t m = order / 2;
  return metacyclic(m, m - 1, m / 2, {Family::quaternion, {order}});
}

GroupPtr product_group(const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw std::invalid_argument("product group needs at least one factor");
  std::size_t n = 1;
  for (auto f : factors) {
    if (f < 1) throw std::invalid_argument("product factor must be >= 1");
    n *= f;
    if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds cap");
  }
  auto digits = [&](std::size_t a) {
    std::vector<std::size_t> d;
    for (auto f : factors) {
      d.push_back(a % f);
      a /= f;
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    auto da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::size_t idx = 0, radix = 1;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        idx += ((da[k] + db[k]) % factors[k]) * radix;
        radix *= factors[k];
      }
      table[a][b] = idx;
    }
  }
  std::vector<std::size_t> gens;
  std::vector<std::string> names;
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::size_t radix = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    gens.push_back(factors[k] == 1 ? 0 : radix);
    names.push_back(factors.size() <= 4 ? kNames[k] : "g" + std::to_string(k + 1));
    radix *= factors[k];
  }
  return FiniteGroup::from_table(std::move(table), std::move(gens), {Family::product, factors},
                                 std::move(names));
}

GroupPtr permutation_group(const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.empty()) throw std::invalid_argument("permutation group needs generators");
  const std::size_t k = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != k) throw std::invalid_argument("permutations of different degrees");
    std::vector<bool> hit(k, false);
    for (auto v : p) {
      if (v >= k || hit[v]) throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }
  using Perm = std::vector<std::size_t>;
  // (p*q)(i) = q(p(i)): apply p first, matching left-to-right word evaluation.
  auto compose = [&](const Perm& p, const Perm& q) {
    Perm r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = q[p[i]];
    return r;
  };
  Perm id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = i;
  std::map<Perm, std::size_t> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Perm next = compose(elems[head], s);
      if (index.emplace(next, elems.size()).second) {
        elems.push_back(next);
        if (elems.size() > kMaxGroupOrder)
          throw std::invalid_argument("permutation group exceeds order cap");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::size_t> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  return FiniteGroup::from_table(std::move(table), std::move(gens), {Family::custom, {}});
}

GroupWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  GroupWord w;
  std::string t;
  for (char c : text) t.push_back(c == '*' || c == '.' ? ' ' : c);
  std::istringstream is(t);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::string base = tok;
    long exponent = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string ex = tok.substr(caret + 1);
      if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
      try {
        std::size_t used = 0;
        exponent = std::stol(ex, &used);
        if (used != ex.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token '" + tok + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), base);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + base + "' in word");
    if (exponent != 0)
      w.letters.emplace_back(static_cast<std::size_t>(it - names.begin()), exponent);
  }
  return w;
}

std::size_t eval_word(const FiniteGroup& g, const GroupWord& w,
                      const std::vector<std::optional<std::size_t>>& assignment) {
  std::size_t r = g.identity();
  for (const auto& [letter, exponent] : w.letters) {
    if (exponent == 0) throw std::invalid_argument("word letter with zero exponent");
    if (letter >= assignment.size() || !assignment[letter])
      throw std::invalid_argument("word letter " + std::to_string(letter) + " is unassigned");
    if (*assignment[letter] >= g.order())
      throw std::invalid_argument("assigned element out of range");
    r = g.mul(r, g.pow(*assignment[letter], exponent));
  }
  return r;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  for (auto s : gens)
    if (s >= g.order()) throw std::invalid_argument("subgroup generator out of range");
  std::vector<std::size_t> elems;
  std::vector<std::size_t> local(g.order(), g.order());
  auto add = [&](std::size_t a) {
    if (local[a] != g.order()) return;
    local[a] = elems.size();
    elems.push_back(a);
  };
  const bool cyclic = gens.size() == 1;
  if (cyclic) {
    std::size_t x = g.identity();
    do {
      add(x);
      x = g.mul(x, gens[0]);
    } while (x != g.identity());
  } else {
    add(g.identity());
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (auto s : gens) add(g.mul(elems[head], s));
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = local[g.mul(elems[a], elems[b])];
  Subgroup out;
  if (cyclic) {
    out.group = FiniteGroup::from_table(std::move(table), {1 % n}, {Family::cyclic, {n}}, {"x"});
  } else {
    std::vector<std::size_t> lg;
    std::vector<std::string> names;
    for (auto s : gens) {
      lg.push_back(local[s]);
      names.push_back(g.element_name(s));
    }
    // Parent names may repeat or contain spaces; fall back to g1, g2, ...
    bool usable = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].find_first_of(" ^") != std::string::npos || names[i] == "e") usable = false;
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) usable = false;
    }
    if (!usable) names.clear();
    out.group = FiniteGroup::from_table(std::move(table), std::move(lg), {Family::custom, {}},
                                        std::move(names));
  }
  out.embedding = std::move(elems);
  return out;
}

bool generates(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  if (elements.empty()) return g.order() == 1;
  return subgroup_generated(g, elements).group->order() == g.order();
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

}  // namespace eqsym
