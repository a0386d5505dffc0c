#include "eqsym/sympmod.hpp"

#include <stdexcept>

namespace eqsym {

SymplecticGModule::SymplecticGModule(GroupPtr group, Matrix omega, std::vector<Matrix> action)
    : group_(std::move(group)), omega_(std::move(omega)), action_(std::move(action)) {
  const auto& g = *group_;
  const std::size_t n = omega_.rows();
  if (!omega_.is_square()) throw std::invalid_argument("symplectic form must be square");
  if (n % 2) throw std::invalid_argument("symplectic module must have even dimension");
  if (!(omega_.transpose() == -omega_)) throw std::invalid_argument("form is not skew-symmetric");
  if (rank(omega_) != n) throw std::invalid_argument("form is degenerate");
  if (action_.size() != g.order()) throw std::invalid_argument("need one action matrix per element");
  for (const auto& a : action_)
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("action matrix has wrong size");
  if (!action_[g.identity()].is_identity())
    throw std::invalid_argument("identity does not act trivially");
  // Closure under right multiplication by generators from the identity
  // reaches every element, so A_g A_s = A_gs on generators implies the
  // homomorphism property on all pairs.
  for (std::size_t a = 0; a < g.order(); ++a)
    for (auto s : g.generators())
      if (!(action_[a] * action_[s] == action_[g.mul(a, s)]))
        throw std::invalid_argument("action is not a homomorphism at (" + g.element_name(a) + ", " +
                                    g.element_name(s) + ")");
  if (!generates(g, g.generators()))
    throw std::invalid_argument("group generators do not generate the group");
  for (std::size_t a = 0; a < g.order(); ++a)
    if (!(action_[a] * omega_ * action_[a].transpose() == omega_))
      throw std::invalid_argument("action of " + g.element_name(a) + " does not preserve the form");
}

SymplecticGModule SymplecticGModule::from_generators(GroupPtr group, Matrix omega,
                                                     const std::vector<Matrix>& generator_images) {
  auto rep = RationalRep::from_generators(group, generator_images, "module action");
  return SymplecticGModule(std::move(group), std::move(omega), rep.matrices());
}

Matrix SymplecticGModule::standard_form(std::size_t pairs) {
  Matrix w(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    w(2 * i, 2 * i + 1) = 1;
    w(2 * i + 1, 2 * i) = -1;
  }
  return w;
}

bool SymplecticGModule::is_invariant(const Subspace& s) const {
  for (const auto& a : action_)
    if (!s.is_invariant(a)) return false;
  return true;
}

SymplecticGModule SymplecticGModule::restrict_to(const Subspace& s) const {
  const Matrix& b = s.basis();
  Matrix bt = b.transpose();
  std::vector<Matrix> act;
  for (const auto& a : action_) {
    Matrix ba = b * a;
    Matrix r(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vector c = s.coordinates(ba.row(i));
      std::copy(c.begin(), c.end(), r.row(i).begin());
    }
    act.push_back(std::move(r));
  }
  return SymplecticGModule(group_, b * omega_ * bt, std::move(act));
}

Subspace perp(const SymplecticGModule& v, const Subspace& s) {
  if (s.ambient_dim() != v.dim()) throw std::invalid_argument("perp: dimension mismatch");
  if (s.dim() == 0) return Subspace::full(v.dim());
  return kernel(s.basis() * v.omega().transpose());
}

SubspaceClass classify_subspace(const SymplecticGModule& v, const Subspace& s) {
  if (s.ambient_dim() != v.dim()) throw std::invalid_argument("classify_subspace: dimension mismatch");
  Subspace p = perp(v, s);
  SubspaceClass c;
  c.isotropic = p.contains(s);
  c.coisotropic = s.contains(p);
  c.lagrangian = c.isotropic && c.coisotropic;
  c.g_invariant = v.is_invariant(s);
  return c;
}

Subspace CoisotropicReduction::pull_back(const Subspace& s) const {
  if (s.ambient_dim() != module.dim()) throw std::invalid_argument("pull_back: dimension mismatch");
  if (s.dim() == 0) return isotropic;
  return Subspace::span(vstack(isotropic.basis(), s.basis() * complement));
}

CoisotropicReduction coisotropic_reduction(const SymplecticGModule& v, const Subspace& i) {
  if (i.ambient_dim() != v.dim()) throw std::invalid_argument("coisotropic_reduction: dimension mismatch");
  if (!v.is_invariant(i)) throw std::invalid_argument("coisotropic_reduction: I is not G-invariant");
  Subspace p = perp(v, i);
  if (!p.contains(i)) throw std::invalid_argument("coisotropic_reduction: I is not contained in its perp");
  Matrix c = complement_basis(p, i);
  const std::size_t m = c.rows();
  Matrix projection(v.dim(), m);
  if (m > 0) projection = right_inverse(vstack(i.basis(), c)).select_cols(i.dim(), m);
  std::vector<Matrix> act;
  for (const auto& a : v.actions()) act.push_back(m ? Matrix(c * a * projection) : Matrix(0, 0));
  Matrix omega = m ? c * v.omega() * c.transpose() : Matrix(0, 0);
  return {SymplecticGModule(v.group(), std::move(omega), std::move(act)), std::move(p), std::move(c),
          std::move(projection), i};
}

SymplecticGModule opposite(const SymplecticGModule& v) {
  return SymplecticGModule(v.group(), -v.omega(), v.actions());
}

SymplecticGModule direct_sum(const SymplecticGModule& v, const SymplecticGModule& w) {
  if (!same_group(*v.group(), *w.group()))
    throw std::invalid_argument("direct_sum: modules over different groups");
  std::vector<Matrix> act;
  for (std::size_t g = 0; g < v.actions().size(); ++g)
    act.push_back(block_diag(v.action(g), w.action(g)));
  return SymplecticGModule(v.group(), block_diag(v.omega(), w.omega()), std::move(act));
}

SymplecticGModule hyperbolic(const RationalRep& rep) {
  const std::size_t n = rep.dim();
  Matrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega(i, n + i) = 1;
    omega(n + i, i) = -1;
  }
  std::vector<Matrix> act;
  for (const auto& m : rep.matrices()) act.push_back(block_diag(m, m.inverse().transpose()));
  return SymplecticGModule(rep.group(), std::move(omega), std::move(act));
}

std::vector<std::size_t> right_coset_representatives(const FiniteGroup& g,
                                                     const std::vector<std::size_t>& embedding) {
  std::vector<bool> covered(g.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (covered[r]) continue;
    reps.push_back(r);
    for (auto h : embedding) covered[g.mul(h, r)] = true;
  }
  return reps;
}

SymplecticGModule induction(const SymplecticGModule& v, const GroupPtr& g,
                            const std::vector<std::size_t>& embedding) {
  const auto& h_group = *v.group();
  const auto& big = *g;
  if (embedding.size() != h_group.order()) throw std::invalid_argument("induction: embedding size != |H|");
  std::vector<std::size_t> local(big.order(), big.order());
  for (std::size_t h = 0; h < embedding.size(); ++h) {
    if (embedding[h] >= big.order() || local[embedding[h]] != big.order())
      throw std::invalid_argument("induction: embedding is not injective");
    local[embedding[h]] = h;
  }
  for (std::size_t a = 0; a < h_group.order(); ++a)
    for (std::size_t b = 0; b < h_group.order(); ++b)
      if (embedding[h_group.mul(a, b)] != big.mul(embedding[a], embedding[b]))
        throw std::invalid_argument("induction: embedding is not a homomorphism");

  auto reps = right_coset_representatives(big, embedding);
  std::vector<std::size_t> coset_of(big.order());
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (auto h : embedding) coset_of[big.mul(h, reps[k])] = k;

  const std::size_t d = v.dim(), n = d * reps.size();
  Matrix omega(n, n);
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) omega(k * d + i, k * d + j) = v.omega()(i, j);

  std::vector<Matrix> act;
  for (std::size_t x = 0; x < big.order(); ++x) {
    Matrix a(n, n);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      // r x = h r'
      std::size_t rx = big.mul(reps[k], x);
      std::size_t k2 = coset_of[rx];
      std::size_t h = big.mul(rx, big.inv(reps[k2]));
      const Matrix& block = v.action(local[h]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(k * d + i, k2 * d + j) = block(i, j);
    }
    act.push_back(std::move(a));
  }
  return SymplecticGModule(g, std::move(omega), std::move(act));
}

GroupAlgebraElement group_ring_form(const SymplecticGModule& v, std::span<const Rational> x,
                                    std::span<const Rational> y) {
  if (x.size() != v.dim() || y.size() != v.dim())
    throw std::invalid_argument("group_ring_form: dimension mismatch");
  std::vector<Rational> coeffs;
  Vector xo = x * v.omega();
  for (const auto& a : v.actions()) coeffs.push_back(dot(xo, y * a));
  return GroupAlgebraElement(v.group(), std::move(coeffs));
}

VerificationResult verify_certificate(const SymplecticGModule& v, const Subspace& l,
                                      std::string provenance) {
  VerificationResult out;
  if (l.ambient_dim() != v.dim()) {
    out.failure = CertificateFailure{"ambient", "subspace lives in dimension " +
                                                    std::to_string(l.ambient_dim()) + ", module has " +
                                                    std::to_string(v.dim()),
                                     {}, {}};
    return out;
  }
  if (2 * l.dim() != v.dim()) {
    out.failure = CertificateFailure{
        "dimension", "dimension " + std::to_string(l.dim()) + " != " + std::to_string(v.dim() / 2), {}, {}};
    return out;
  }
  const Matrix& b = l.basis();
  Matrix gram = b * v.omega() * b.transpose();
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != 0) {
        out.failure = CertificateFailure{"isotropy",
                                         "form value " + to_pq_string(gram(i, j)) + " on basis vectors " +
                                             std::to_string(i) + "," + std::to_string(j),
                                         b.row_copy(i), b.row_copy(j)};
        return out;
      }
  const auto& g = *v.group();
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      Vector img = b.row(i) * v.action(a);
      if (!l.contains(img)) {
        out.failure = CertificateFailure{"invariance",
                                         "image of basis vector " + std::to_string(i) + " under " +
                                             g.element_name(a) + " leaves the subspace",
                                         b.row_copy(i), std::move(img)};
        return out;
      }
    }
  }
  out.certificate = LagrangianCertificate{l, {true, true, true}, std::move(provenance)};
  return out;
}

LagrangianCertificate certify(const SymplecticGModule& v, const Subspace& l, std::string provenance) {
  auto res = verify_certificate(v, l, provenance);
  if (!res.ok())
    throw VerificationFailure(provenance + ": " + res.failure->property + " check failed: " +
                              res.failure->detail);
  return *res.certificate;
}

KaroubiResult karoubi_lagrangian(const SymplecticGModule& v, const Subspace& i, const Subspace& j) {
  auto ri = coisotropic_reduction(v, i);
  auto rj = coisotropic_reduction(v, j);
  SymplecticGModule sum_module = direct_sum(ri.module, opposite(rj.module));
  Subspace both = intersection(ri.coisotropic, rj.coisotropic);
  Subspace delta = Subspace::zero(sum_module.dim());
  if (both.dim() > 0 && sum_module.dim() > 0)
    delta = Subspace::span(hstack(both.basis() * ri.projection, both.basis() * rj.projection));
  auto cert = certify(sum_module, delta, "karoubi-diagonal");
  return {std::move(sum_module), std::move(cert)};
}

Subspace transverse_lagrangian(const SymplecticGModule& v, const Subspace& l) {
  const std::size_t n = v.dim(), k = l.dim();
  if (2 * k != n) throw std::invalid_argument("transverse_lagrangian: L is not half-dimensional");
  std::vector<bool> is_pivot(n, false);
  for (auto p : l.pivots()) is_pivot[p] = true;
  Matrix c(k, n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col)
    if (!is_pivot[col]) c(row++, col) = 1;
  if (k == 0) return Subspace::zero(n);
  const Matrix& lb = l.basis();
  Matrix pair = lb * v.omega() * c.transpose();  // P_ij = omega(l_i, c_j)
  Matrix self = c * v.omega() * c.transpose();   // Q_ab = omega(c_a, c_b)
  Matrix x = self * pair.inverse() * Rational(-1, 2);
  return Subspace::span(c + x * lb);
}

LagrangianCertificate transverse_invariant_lagrangian(const SymplecticGModule& v, const Subspace& l) {
  auto pre = verify_certificate(v, l, "input");
  if (!pre.ok())
    throw std::invalid_argument("transverse_invariant_lagrangian: L is not an invariant Lagrangian (" +
                                pre.failure->property + ")");
  const std::size_t n = v.dim(), k = l.dim();
  if (k == 0) return certify(v, Subspace::zero(n), "transverse-barycenter");
  Subspace m0 = transverse_lagrangian(v, l);
  Matrix kinv = vstack(m0.basis(), l.basis()).inverse();
  Matrix avg(k, k);
  for (const auto& a : v.actions()) {
    Matrix coords = m0.basis() * a * kinv;
    Matrix alpha = coords.select_cols(0, k), beta = coords.select_cols(k, k);
    avg += alpha.inverse() * beta;
  }
  avg *= Rational(1, static_cast<long>(v.actions().size()));
  Subspace m = Subspace::span(m0.basis() + avg * l.basis());
  auto cert = certify(v, m, "transverse-barycenter");
  if (intersection(l, m).dim() != 0) throw VerificationFailure("transverse-barycenter: L and M intersect");
  return cert;
}

Subspace greedy_lagrangian(const SymplecticGModule& v, const Subspace& s) {
  Subspace l = Subspace::zero(v.dim());
  while (2 * l.dim() < s.dim()) {
    Subspace room = intersection(perp(v, l), s);
    bool grown = false;
    for (std::size_t i = 0; i < room.dim(); ++i) {
      auto r = room.basis().row(i);
      if (l.contains(r)) continue;
      l = sum(l, Subspace::span(Matrix::row_vector(r)));
      grown = true;
      break;
    }
    if (!grown) throw std::invalid_argument("greedy_lagrangian: subspace is degenerate");
  }
  return l;
}

}  // namespace eqsym
