#include "eqsym/repcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqsym {

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order()) {}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<Rational> coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_->order())
    throw std::invalid_argument("group algebra element: coefficient count != |G|");
}

GroupAlgebraElement GroupAlgebraElement::basis_element(GroupPtr group, std::size_t g) {
  GroupAlgebraElement a(std::move(group));
  a.coeffs_.at(g) = 1;
  return a;
}

GroupAlgebraElement GroupAlgebraElement::one(GroupPtr group) {
  const auto id = group->identity();
  return basis_element(std::move(group), id);
}

GroupAlgebraElement GroupAlgebraElement::conjugate() const {
  GroupAlgebraElement out(group_);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) out.coeffs_[group_->inv(g)] = coeffs_[g];
  return out;
}

bool GroupAlgebraElement::is_central() const {
  for (auto s : group_->generators()) {
    auto gs = basis_element(group_, s);
    if (!(gs * *this == *this * gs)) return false;
  }
  return true;
}

bool GroupAlgebraElement::is_zero() const { return is_zero_vector(coeffs_); }

Matrix GroupAlgebraElement::apply(const std::vector<Matrix>& action) const {
  if (action.size() != coeffs_.size())
    throw std::invalid_argument("group algebra apply: action size != |G|");
  Matrix m(action.at(0).rows(), action.at(0).cols());
  for (std::size_t g = 0; g < coeffs_.size(); ++g)
    if (coeffs_[g] != 0) m += action[g] * coeffs_[g];
  return m;
}

static void require_same_group(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.group() != b.group() && a.group()->order() != b.group()->order())
    throw std::invalid_argument("group algebra elements over different groups");
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  GroupAlgebraElement out = a;
  for (std::size_t g = 0; g < out.coeffs_.size(); ++g) out.coeffs_[g] += b.coeffs_[g];
  return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  GroupAlgebraElement out = a;
  for (std::size_t g = 0; g < out.coeffs_.size(); ++g) out.coeffs_[g] -= b.coeffs_[g];
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  const auto& grp = *a.group_;
  GroupAlgebraElement out(a.group_);
  Rational t;
  for (std::size_t g = 0; g < grp.order(); ++g) {
    if (a.coeffs_[g] == 0) continue;
    for (std::size_t h = 0; h < grp.order(); ++h) {
      if (b.coeffs_[h] == 0) continue;
      t = a.coeffs_[g] * b.coeffs_[h];
      out.coeffs_[grp.mul(g, h)] += t;
    }
  }
  return out;
}

GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
  GroupAlgebraElement out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.coeffs_ == b.coeffs_;
}

Rational trace_pairing(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same_group(a, b);
  return dot(a.coefficients(), b.coefficients());
}

// ---------------------------------------------------------------------------
// Representations

RationalRep RationalRep::from_matrices(GroupPtr group, std::vector<Matrix> matrices,
                                       std::string label, std::optional<std::size_t> endo_dim) {
  const auto& g = *group;
  if (matrices.size() != g.order())
    throw std::invalid_argument("representation '" + label + "': need one matrix per element");
  const std::size_t d = matrices[0].rows();
  for (const auto& m : matrices)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("representation '" + label + "': inconsistent matrix sizes");
  if (!matrices[g.identity()].is_identity())
    throw std::invalid_argument("representation '" + label + "': identity not sent to identity");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(matrices[a] * matrices[b] == matrices[g.mul(a, b)]))
        throw std::invalid_argument("representation '" + label + "' is not a homomorphism at (" +
                                    g.element_name(a) + ", " + g.element_name(b) + ")");
  RationalRep r;
  r.group_ = std::move(group);
  r.dim_ = d;
  r.matrices_ = std::move(matrices);
  r.label_ = std::move(label);
  r.endo_dim_ = endo_dim;
  return r;
}

RationalRep RationalRep::from_generators(GroupPtr group, const std::vector<Matrix>& generator_images,
                                         std::string label, std::optional<std::size_t> endo_dim) {
  const auto& g = *group;
  if (generator_images.size() != g.generators().size())
    throw std::invalid_argument("representation '" + label + "': need one image per generator");
  const std::size_t d = generator_images.empty() ? 0 : generator_images[0].rows();
  for (const auto& m : generator_images)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("representation '" + label + "': generator images must be square");
  std::vector<std::optional<Matrix>> mats(g.order());
  mats[g.identity()] = Matrix::identity(d);
  std::vector<std::size_t> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto a = queue[head];
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      auto b = g.mul(a, g.generators()[k]);
      if (mats[b]) continue;
      mats[b] = *mats[a] * generator_images[k];
      queue.push_back(b);
    }
  }
  std::vector<Matrix> all;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!mats[a])
      throw std::invalid_argument("representation '" + label + "': generators do not generate");
    all.push_back(std::move(*mats[a]));
  }
  return from_matrices(std::move(group), std::move(all), std::move(label), endo_dim);
}

RationalRep RationalRep::trivial(GroupPtr group) {
  std::vector<Matrix> mats(group->order(), Matrix::identity(1));
  return from_matrices(std::move(group), std::move(mats), "trivial", 1);
}

RationalRep RationalRep::regular(GroupPtr group) {
  const auto& g = *group;
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m(g.order(), g.order());
    for (std::size_t h = 0; h < g.order(); ++h) m(g.mul(a, h), h) = 1;
    mats.push_back(std::move(m));
  }
  return from_matrices(std::move(group), std::move(mats), "regular");
}

RationalRep RationalRep::cyclic_submodule(const Vector& u, std::string label,
                                          std::optional<std::size_t> endo_dim) const {
  std::vector<Vector> orbit;
  for (const auto& m : matrices_) orbit.push_back(u * m.transpose());
  Subspace s = Subspace::span(dim_, orbit);
  std::vector<Matrix> restricted;
  for (const auto& m : matrices_) {
    Matrix mt = m.transpose();
    Matrix r(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vector c = s.coordinates(s.basis().row(i) * mt);
      for (std::size_t j = 0; j < s.dim(); ++j) r(j, i) = c[j];
    }
    restricted.push_back(std::move(r));
  }
  return from_matrices(group_, std::move(restricted), std::move(label), endo_dim);
}

RationalRep RationalRep::pullback(GroupPtr source, const std::vector<std::size_t>& hom,
                                  std::string label) const {
  if (hom.size() != source->order()) throw std::invalid_argument("pullback: map size != |source|");
  std::vector<Matrix> mats;
  for (auto t : hom) mats.push_back(matrices_.at(t));
  return from_matrices(std::move(source), std::move(mats), std::move(label), endo_dim_);
}

RationalRep RationalRep::direct_sum(const RationalRep& other, std::string label) const {
  if (other.group_->order() != group_->order())
    throw std::invalid_argument("direct_sum: representations of different groups");
  std::vector<Matrix> mats;
  for (std::size_t g = 0; g < matrices_.size(); ++g)
    mats.push_back(block_diag(matrices_[g], other.matrices_[g]));
  return from_matrices(group_, std::move(mats), std::move(label));
}

Subspace commutant(const std::vector<Matrix>& action, std::size_t dim) {
  const std::size_t n2 = dim * dim;
  std::vector<Vector> rows;
  for (const auto& a : action) {
    if (a.is_identity()) continue;
    // (X A - A X)_{ij} = sum_k X_ik A_kj - A_ik X_kj
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Vector r(n2);
        for (std::size_t k = 0; k < dim; ++k) {
          r[i * dim + k] += a(k, j);
          r[k * dim + j] -= a(i, k);
        }
        if (!is_zero_vector(r)) rows.push_back(std::move(r));
      }
    }
  }
  if (rows.empty()) return Subspace::full(n2);
  return kernel(Matrix::from_rows(rows, n2));
}

std::size_t commutant_dim(const RationalRep& rep) {
  std::vector<Matrix> gens;
  for (auto s : rep.group()->generators()) gens.push_back(rep.matrix(s));
  return commutant(gens, rep.dim()).dim();
}

// ---------------------------------------------------------------------------
// Cyclotomic data

std::size_t euler_phi(std::size_t m) {
  std::size_t result = m, n = m;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d) continue;
    auto den = cyclotomic_polynomial(d);  // monic
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (std::size_t shift = q.size(); shift-- > 0;) {
      long c = num[shift + den.size() - 1];
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

Matrix cyclotomic_companion(std::size_t m) {
  auto p = cyclotomic_polynomial(m);
  const std::size_t k = p.size() - 1;
  Matrix c(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -p[i];
  return c;
}

namespace {

Matrix scalar1(long v) { return Matrix{{Rational(v)}}; }

// Coordinates of zeta^k in the power basis, as columns of the map
// zeta^j -> zeta^(-j) (complex conjugation on Q(zeta)).
Matrix conjugation_matrix(std::size_t d) {
  Matrix c = cyclotomic_companion(d);
  const std::size_t k = c.rows();
  Matrix cinv = c.inverse();
  Matrix j(k, k);
  Matrix p = Matrix::identity(k);
  for (std::size_t col = 0; col < k; ++col) {
    // column col = cinv^col * e_0
    for (std::size_t r = 0; r < k; ++r) j(r, col) = p(r, 0);
    p = cinv * p;
  }
  return j;
}

std::vector<RationalRep> abelian_catalog(const GroupPtr& group, const std::vector<std::size_t>& factors) {
  std::size_t big = 1;
  for (auto f : factors) big = std::lcm(big, f);
  std::vector<std::size_t> units;
  for (std::size_t u = 1; u <= big; ++u)
    if (std::gcd(u, big) == 1) units.push_back(u % big);

  // Characters are exponent vectors e with x_k -> zeta_{n_k}^{e_k}.
  std::vector<std::vector<std::size_t>> chars{{}};
  for (auto f : factors) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : chars)
      for (std::size_t e = 0; e < f; ++e) {
        auto d = c;
        d.push_back(e);
        next.push_back(d);
      }
    chars = next;
  }
  std::set<std::vector<std::size_t>> seen;
  struct Orbit {
    std::size_t order;
    std::vector<std::size_t> rep;
  };
  std::vector<Orbit> orbits;
  for (const auto& c : chars) {
    if (seen.count(c)) continue;
    for (auto u : units) {
      auto d = c;
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = (d[k] * u) % factors[k];
      seen.insert(d);
    }
    std::size_t ord = 1;
    for (std::size_t k = 0; k < c.size(); ++k) ord = std::lcm(ord, factors[k] / std::gcd(factors[k], c[k]));
    orbits.push_back({ord, c});
  }
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const Orbit& a, const Orbit& b) { return a.order < b.order; });

  std::vector<RationalRep> reps;
  for (const auto& orb : orbits) {
    const std::size_t d = orb.order;
    Matrix comp = cyclotomic_companion(d);
    std::vector<Matrix> images;
    std::string label = d == 1 ? "trivial" : "chi(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      // zeta_{n_k}^{e_k} = zeta_d^{e_k d / n_k}
      std::size_t expo = orb.rep[k] * d / factors[k];
      images.push_back(power(comp, static_cast<long>(expo)));
      if (d != 1) label += (k ? "," : "") + std::to_string(orb.rep[k]);
    }
    if (d != 1) label += ")";
    // Generators of size-1 factors map to the identity element; keep the
    // image list aligned with group->generators().
    reps.push_back(RationalRep::from_generators(group, images, label, euler_phi(d)));
  }
  return reps;
}

std::vector<RationalRep> dihedral_catalog(const GroupPtr& group, std::size_t m) {
  std::vector<RationalRep> reps;
  reps.push_back(RationalRep::from_generators(group, {scalar1(1), scalar1(1)}, "trivial", 1));
  reps.push_back(RationalRep::from_generators(group, {scalar1(1), scalar1(-1)}, "sign_y", 1));
  if (m % 2 == 0) {
    reps.push_back(RationalRep::from_generators(group, {scalar1(-1), scalar1(1)}, "sign_x", 1));
    reps.push_back(RationalRep::from_generators(group, {scalar1(-1), scalar1(-1)}, "sign_xy", 1));
  }
  for (std::size_t d = 3; d <= m; ++d) {
    if (m % d) continue;
    reps.push_back(RationalRep::from_generators(
        group, {cyclotomic_companion(d), conjugation_matrix(d)}, "rot" + std::to_string(d),
        euler_phi(d) / 2));
  }
  return reps;
}

// Irreducibles of semidihedral and quaternion groups that factor through
// the quotient by the center <x^(m/2)>, which is dihedral of order m.
std::vector<RationalRep> central_quotient_catalog(const GroupPtr& group) {
  const std::size_t order = group->order(), m = order / 2, half = m / 2;
  auto quotient = dihedral_group(m);
  std::vector<std::size_t> hom(order);
  for (std::size_t a = 0; a < order; ++a) hom[a] = (a % m) % half + half * (a / m);
  std::vector<RationalRep> reps;
  for (const auto& r : dihedral_catalog(quotient, half)) reps.push_back(r.pullback(group, hom, r.label()));
  return reps;
}

}  // namespace

std::vector<RationalRep> catalog_reps(const GroupPtr& group) {
  const auto& tag = group->tag();
  const std::size_t order = group->order();
  switch (tag.family) {
    case Family::cyclic: return abelian_catalog(group, {order});
    case Family::product: return abelian_catalog(group, tag.params);
    case Family::dihedral: return dihedral_catalog(group, order / 2);
    case Family::semidihedral: {
      const std::size_t m = order / 2, k = euler_phi(m);
      auto reps = central_quotient_catalog(group);
      // Q(zeta)^2 with x(u,v) = (zeta u, -zeta^-1 v), y(u,v) = (v,u); the
      // orbit of (1,1) spans the faithful irreducible.
      Matrix c = cyclotomic_companion(m);
      Matrix x = block_diag(c, -c.inverse());
      Matrix y(2 * k, 2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        y(i, k + i) = 1;
        y(k + i, i) = 1;
      }
      auto big = RationalRep::from_generators(group, {x, y}, "sd_ambient");
      Vector u(2 * k);
      u[0] = 1;
      u[k] = 1;
      reps.push_back(big.cyclic_submodule(u, "faithful", k / 2));
      return reps;
    }
    case Family::quaternion: {
      const std::size_t m = order / 2, k = euler_phi(m);
      auto reps = central_quotient_catalog(group);
      // Q(zeta)^2 with x(u,v) = (zeta u, zeta^-1 v), y(u,v) = (-v,u).
      Matrix c = cyclotomic_companion(m);
      Matrix x = block_diag(c, c.inverse());
      Matrix y(2 * k, 2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        y(i, k + i) = -1;
        y(k + i, i) = 1;
      }
      reps.push_back(RationalRep::from_generators(group, {x, y}, "faithful", 2 * k));
      return reps;
    }
    case Family::custom:
      break;
  }
  throw std::invalid_argument("no built-in representation catalog for " + group->describe() +
                              "; supply representations explicitly");
}

Rational artin_wedderburn_count(const std::vector<RationalRep>& reps) {
  Rational total = 0;
  for (const auto& r : reps) {
    std::size_t e = r.endo_dim() ? *r.endo_dim() : commutant_dim(r);
    total += make_rational(static_cast<long>(r.dim() * r.dim()), static_cast<long>(e));
  }
  return total;
}

std::vector<GroupAlgebraElement> central_idempotents(const GroupPtr& group,
                                                     const std::vector<RationalRep>& reps) {
  const auto& g = *group;
  if (artin_wedderburn_count(reps) != Rational(static_cast<long>(g.order())))
    throw std::invalid_argument("representation catalog is incomplete: sum dim^2/endo_dim != |G|");
  std::vector<GroupAlgebraElement> out;
  for (const auto& r : reps) {
    std::size_t e = r.endo_dim() ? *r.endo_dim() : commutant_dim(r);
    Rational c = make_rational(static_cast<long>(r.dim()), static_cast<long>(e * g.order()));
    std::vector<Rational> coeffs(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) coeffs[a] = c * r.character(g.inv(a));
    out.emplace_back(group, std::move(coeffs));
  }
  auto one = GroupAlgebraElement::one(group);
  GroupAlgebraElement total(group);
  for (std::size_t i = 0; i < out.size(); ++i) {
    total = total + out[i];
    if (!(out[i] * out[i] == out[i]))
      throw std::logic_error("idempotent for '" + reps[i].label() + "' is not idempotent");
    if (!out[i].is_central())
      throw std::logic_error("idempotent for '" + reps[i].label() + "' is not central");
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && !(out[i] * out[j]).is_zero())
        throw std::logic_error("idempotents for '" + reps[i].label() + "' and '" + reps[j].label() +
                               "' are not orthogonal");
      Matrix act = out[i].apply(reps[j].matrices());
      bool ok = i == j ? act.is_identity() : act.is_zero();
      if (!ok)
        throw std::logic_error("idempotent for '" + reps[i].label() + "' acts wrongly on '" +
                               reps[j].label() + "'");
    }
  }
  if (!(total == one)) throw std::logic_error("central idempotents do not sum to 1");
  return out;
}

GroupAlgebraElement primitive_idempotent(const RationalRep& rep, const GroupAlgebraElement& central) {
  const auto& g = *rep.group();
  const std::size_t target = rep.endo_dim() ? *rep.endo_dim() : commutant_dim(rep);
  if (rank(central.apply(rep.matrices())) == target) return central;
  const auto& group = rep.group();
  // e * (1 + s + ... + s^(k-1)) / k, the projector onto <s>-fixed vectors
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (s == g.identity()) continue;
    const std::size_t k = g.element_order(s);
    GroupAlgebraElement avg(group);
    for (std::size_t j = 0, p = g.identity(); j < k; ++j, p = g.mul(p, s))
      avg = avg + GroupAlgebraElement::basis_element(group, p);
    auto cand = central * (make_rational(1, static_cast<long>(k)) * avg);
    if (rank(cand.apply(rep.matrices())) == target) return cand;
  }
  return central;
}

Matrix averaged_invariant_form(const RationalRep& rep) {
  Matrix b(rep.dim(), rep.dim());
  for (const auto& m : rep.matrices()) b += m * m.transpose();
  b *= Rational(1, static_cast<long>(rep.group()->order()));
  return b;
}

}  // namespace eqsym
