#include "eqsym/lagfind.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace eqsym {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::field_symplectic: return "field_symplectic";
    case Strategy::orbit_reduce: return "orbit_reduce";
    case Strategy::enumerate: return "enumerate";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  for (auto s : {Strategy::field_symplectic, Strategy::orbit_reduce, Strategy::enumerate})
    if (strategy_name(s) == name) return s;
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected field_symplectic, orbit_reduce or enumerate)");
}

void SearchConfig::validate() const {
  if (height_bound == 0) throw std::invalid_argument("height_bound must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
}

std::vector<Rational> rationals_up_to_height(std::size_t h) {
  std::vector<std::tuple<std::size_t, long, long, int>> keys;  // height, den, |num|, sign
  for (long q = 1; q <= static_cast<long>(h); ++q)
    for (long p = 1; p <= static_cast<long>(h); ++p)
      if (std::gcd(p, q) == 1) {
        std::size_t ht = static_cast<std::size_t>(std::max(p, q));
        keys.emplace_back(ht, q, p, 0);
        keys.emplace_back(ht, q, p, 1);
      }
  std::sort(keys.begin(), keys.end());
  std::vector<Rational> out{Rational(0)};
  for (auto [ht, q, p, neg] : keys) out.push_back(make_rational(neg ? -p : p, q));
  return out;
}

HeightEnumerator::HeightEnumerator(std::size_t dim, std::size_t bound, std::uint64_t seed)
    : dim_(dim), bound_(bound), values_(rationals_up_to_height(bound)), order_(dim) {
  counts_.assign(bound + 1, 0);
  counts_[0] = 1;  // zero comes first
  for (std::size_t i = 1; i < values_.size(); ++i) ++counts_[rational_height(values_[i])];
  for (std::size_t h = 1; h <= bound; ++h) counts_[h] += counts_[h - 1];
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = dim; i > 1; --i) std::swap(order_[i - 1], order_[rng() % i]);
  }
}

bool HeightEnumerator::next(Vector& out) {
  if (dim_ == 0) return false;
  while (height_ <= bound_) {
    bool fresh = false;
    if (!started_) {
      digits_.assign(dim_, 0);
      started_ = true;
      fresh = true;
    }
    if (!fresh) {
      std::size_t i = dim_;
      bool carried_out = true;
      while (i-- > 0) {
        if (++digits_[i] < counts_[height_]) {
          carried_out = false;
          break;
        }
        digits_[i] = 0;
      }
      if (carried_out) {
        ++height_;
        started_ = false;
        continue;
      }
    }
    if (*std::max_element(digits_.begin(), digits_.end()) < counts_[height_ - 1]) continue;
    out.assign(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) out[order_[i]] = values_[digits_[i]];
    return true;
  }
  return false;
}

BlockDecomposition isotypic_blocks(const SymplecticGModule& v, const std::vector<RationalRep>& reps) {
  auto idem = central_idempotents(v.group(), reps);
  BlockDecomposition out;
  std::size_t total = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Subspace s = v.dim() ? row_space(idem[i].apply(v.actions())) : Subspace::zero(0);
    if (!v.is_invariant(s)) throw std::logic_error("block " + reps[i].label() + " is not invariant");
    total += s.dim();
    out.blocks.push_back({reps[i].label(), std::move(s), i});
  }
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j) {
      const auto& a = out.blocks[i].space;
      const auto& b = out.blocks[j].space;
      if (a.dim() && b.dim() && !(a.basis() * v.omega() * b.basis().transpose()).is_zero())
        throw std::logic_error("blocks " + out.blocks[i].label + " and " + out.blocks[j].label +
                               " are not orthogonal");
    }
  if (total != v.dim()) throw std::logic_error("isotypic blocks do not span the module");
  Subspace all = Subspace::zero(v.dim());
  for (const auto& b : out.blocks) all = sum(all, b.space);
  if (all.dim() != v.dim()) throw std::logic_error("isotypic blocks are not independent");
  out.certified_orthogonal = true;
  return out;
}

namespace {

bool acts_by_sign(const SymplecticGModule& m) {
  for (const auto& a : m.actions())
    if (!a.is_identity() && !(-a).is_identity()) return false;
  return true;
}

struct SearchState {
  const SearchConfig& cfg;
  std::optional<GroupAlgebraElement> projector;
  std::size_t iterations = 0;
  bool spent = false;
};

// Invariant Lagrangian of m, found by picking an isotropic orbit span,
// reducing and recursing. The span of {w A_g} is isotropic exactly when
// omega(w, w A_g) = 0 for all g, so candidates are filtered by the
// quadratic forms c -> c S_g c^T in the enumeration coordinates.
std::optional<Subspace> orbit_search(const SymplecticGModule& m, SearchState& st) {
  const std::size_t n = m.dim();
  if (n == 0) return Subspace::zero(0);
  if (acts_by_sign(m)) return greedy_lagrangian(m, Subspace::full(n));

  Matrix frame = Matrix::identity(n);
  if (st.projector) frame = row_space(st.projector->apply(m.actions())).basis();
  if (frame.rows() == 0) return std::nullopt;

  std::vector<Matrix> forms;
  const auto& g = *m.group();
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a == g.identity()) continue;
    Matrix s = frame * m.omega() * m.action(a).transpose() * frame.transpose();
    Matrix q = s + s.transpose();
    if (q.is_zero()) continue;
    if (std::find(forms.begin(), forms.end(), q) != forms.end() ||
        std::find(forms.begin(), forms.end(), -q) != forms.end())
      continue;
    forms.push_back(std::move(q));
  }

  HeightEnumerator it(frame.rows(), st.cfg.height_bound, st.cfg.seed);
  Vector c;
  while (it.next(c)) {
    // c and -c give the same orbit span
    auto lead = std::find_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
    if (*lead < 0) continue;
    if (++st.iterations > st.cfg.max_iterations) {
      st.spent = true;
      return std::nullopt;
    }
    bool isotropic = true;
    for (const auto& q : forms)
      if (bilinear(c, q, c) != 0) {
        isotropic = false;
        break;
      }
    if (!isotropic) continue;
    Vector w = c * frame;
    std::vector<Vector> orbit;
    for (const auto& a : m.actions()) orbit.push_back(w * a);
    Subspace i = Subspace::span(n, orbit);
    auto red = coisotropic_reduction(m, i);
    auto sub = orbit_search(red.module, st);
    if (sub) {
      Subspace l = red.pull_back(*sub);
      auto check = verify_certificate(m, l, "orbit-reduce");
      if (!check.ok())
        throw VerificationFailure("orbit_reduce pullback failed " + check.failure->property + ": " +
                                  check.failure->detail);
      return l;
    }
    if (st.spent) return std::nullopt;
  }
  return std::nullopt;
}

struct BlockOutcome {
  std::optional<Subspace> lagrangian;
  BlockReport report;
};

BlockOutcome solve_block(const SymplecticGModule& m, const std::optional<GroupAlgebraElement>& primitive,
                         const SearchConfig& cfg, std::string label) {
  BlockOutcome out;
  out.report.label = std::move(label);
  out.report.dim = m.dim();
  if (m.dim() == 0) {
    out.lagrangian = Subspace::zero(0);
    out.report.strategy = "empty";
    return out;
  }
  for (auto s : cfg.strategies) {
    if (s == Strategy::field_symplectic) {
      if (!acts_by_sign(m)) continue;
      out.lagrangian = greedy_lagrangian(m, Subspace::full(m.dim()));
    } else {
      SearchState st{cfg, s == Strategy::orbit_reduce ? primitive : std::nullopt};
      if (s == Strategy::orbit_reduce && !primitive) continue;
      out.lagrangian = orbit_search(m, st);
      out.report.iterations += st.iterations;
    }
    if (out.lagrangian) {
      out.report.strategy = strategy_name(s);
      return out;
    }
  }
  out.report.strategy = "exhausted";
  return out;
}

}  // namespace

SearchResult find_invariant_lagrangian(const SymplecticGModule& v,
                                       const std::optional<std::vector<RationalRep>>& reps,
                                       const SearchConfig& cfg) {
  cfg.validate();
  std::optional<std::vector<RationalRep>> catalog = reps;
  if (!catalog) {
    try {
      catalog = catalog_reps(v.group());
    } catch (const std::invalid_argument&) {
    }
  }

  SearchResult result;
  std::vector<Vector> rows;
  auto absorb = [&](const BlockOutcome& o, const Matrix& basis) {
    result.blocks.push_back(o.report);
    if (!o.lagrangian) return false;
    const Matrix& lb = o.lagrangian->basis();
    for (std::size_t i = 0; i < lb.rows(); ++i) rows.push_back(lb.row(i) * basis);
    return true;
  };

  bool ok = true;
  if (catalog) {
    auto blocks = isotypic_blocks(v, *catalog);
    auto idem = central_idempotents(v.group(), *catalog);
    for (const auto& b : blocks.blocks) {
      if (b.space.dim() == 0) continue;
      SymplecticGModule m = v.restrict_to(b.space);
      auto prim = primitive_idempotent((*catalog)[*b.rep], idem[*b.rep]);
      ok = absorb(solve_block(m, prim, cfg, b.label), b.space.basis()) && ok;
      if (!ok) break;
    }
  } else {
    ok = absorb(solve_block(v, std::nullopt, cfg, "whole"), Matrix::identity(v.dim()));
  }

  if (!ok) {
    const auto& last = result.blocks.back();
    result.message = "exhausted: no invariant Lagrangian found in block " + last.label + " (dim " +
                     std::to_string(last.dim) + ") within height " + std::to_string(cfg.height_bound) +
                     " and " + std::to_string(cfg.max_iterations) + " iterations per strategy";
    return result;
  }
  Subspace l = Subspace::span(v.dim(), rows);
  std::string provenance = "blocks";
  for (const auto& b : result.blocks) provenance += ";" + b.label + ":" + b.strategy;
  result.certificate = certify(v, l, provenance);
  result.message = "verified";
  return result;
}

WittResult witt_equivalent(const SymplecticGModule& v, const SymplecticGModule& w, const SearchConfig& cfg,
                           const std::optional<std::vector<RationalRep>>& reps) {
  if (!same_group(*v.group(), *w.group()))
    throw std::invalid_argument("witt_equivalent: modules are over different groups");
  SymplecticGModule total = direct_sum(v, opposite(w));
  auto search = find_invariant_lagrangian(total, reps, cfg);
  bool eq = search.ok();
  return WittResult{eq, std::move(total), std::move(search)};
}

}  // namespace eqsym
