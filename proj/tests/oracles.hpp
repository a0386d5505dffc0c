#pragma once
// Independent checks and random generators for the test binaries.
// Nothing here calls the library's elimination code: ranks and
// isotropy are recomputed from scratch so a bug in rref cannot hide
// a bug in a certificate.

#include <cstdint>
#include <random>
#include <vector>

#include "eqsym/corpus.hpp"
#include "eqsym/matrix.hpp"
#include "eqsym/repcat.hpp"
#include "eqsym/subspace.hpp"
#include "eqsym/sympmod.hpp"

namespace oracle {

using eqsym::Matrix;
using eqsym::Rational;
using eqsym::Vector;

// plain Gaussian elimination on a copy
inline std::size_t rank_of(std::vector<Vector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_copy(i));
  return out;
}

inline std::size_t rank_of(const Matrix& m) { return rank_of(rows_of(m)); }

inline Rational form(const Vector& u, const Matrix& w, const Vector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * w(i, j) * v[j];
  }
  return s;
}

inline Vector times(const Vector& v, const Matrix& a) {
  Vector out(a.cols(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
  return out;
}

// Is span(rows of b) a G-invariant Lagrangian of (omega, action)?
inline bool is_invariant_lagrangian(const Matrix& omega, const std::vector<Matrix>& action, const Matrix& b) {
  auto rows = rows_of(b);
  if (rank_of(rows) != rows.size() || 2 * rows.size() != omega.rows()) return false;
  for (const auto& u : rows)
    for (const auto& v : rows)
      if (form(u, omega, v) != 0) return false;
  for (const auto& a : action) {
    auto both = rows;
    for (const auto& u : rows) both.push_back(times(u, a));
    if (rank_of(both) != rows.size()) return false;
  }
  return true;
}

inline bool is_invariant_lagrangian(const eqsym::SymplecticGModule& v, const eqsym::Subspace& l) {
  return l.ambient_dim() == v.dim() && is_invariant_lagrangian(v.omega(), v.actions(), l.basis());
}

inline bool transverse(const eqsym::Subspace& a, const eqsym::Subspace& b) {
  auto rows = rows_of(a.basis());
  for (const auto& r : rows_of(b.basis())) rows.push_back(r);
  return rank_of(rows) == a.dim() + b.dim();
}

inline bool is_skew_nondegenerate(const Matrix& w) {
  if (!w.is_square() || !(w.transpose() == -w)) return false;
  return rank_of(w) == w.rows();
}

inline bool preserves(const Matrix& w, const Matrix& a) { return a * w * a.transpose() == w; }

// Small random rationals: numerators in [-h, h], denominators in [1, h].
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  Rational rational(long h = 3) {
    if (coin(0.3)) return 0;
    return eqsym::make_rational(integer(-h, h), integer(1, h));
  }
  Vector vector(std::size_t n, long h = 3) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(h));
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, long h = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(h);
    return m;
  }
  // unit lower times unit upper, never singular
  Matrix invertible(std::size_t n) {
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = integer(-2, 2);
        u(j, i) = integer(-2, 2);
      }
    return l * u;
  }
  // k random generators in Q^n, possibly dependent
  eqsym::Subspace subspace(std::size_t n, std::size_t k) { return eqsym::Subspace::span(matrix(k, n)); }
};

// Grows an invariant isotropic subspace by adding orbit spans of random
// vectors and keeping each enlargement only if it stays isotropic.
inline eqsym::Subspace random_invariant_isotropic(const eqsym::SymplecticGModule& v, Gen& gen,
                                                  std::size_t attempts) {
  auto cur = eqsym::Subspace::zero(v.dim());
  for (std::size_t t = 0; t < attempts; ++t) {
    // sparse vectors have isotropic orbits far more often
    Vector w(v.dim(), Rational(0));
    for (auto& x : w)
      if (gen.coin(0.25)) x = gen.integer(-2, 2);
    std::vector<Vector> rows = rows_of(cur.basis());
    for (const auto& a : v.actions()) rows.push_back(times(w, a));
    auto next = eqsym::Subspace::span(v.dim(), rows);
    bool iso = true;
    for (std::size_t i = 0; i < next.dim() && iso; ++i)
      for (std::size_t j = i + 1; j < next.dim() && iso; ++j)
        iso = form(next.basis().row_copy(i), v.omega(), next.basis().row_copy(j)) == 0;
    if (iso) cur = next;
  }
  return cur;
}

// Groups with a built-in catalog, across every family.
inline std::vector<eqsym::GroupPtr> catalog_groups() {
  using namespace eqsym;
  std::vector<GroupPtr> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back(cyclic_group(n));
  for (std::size_t o : {4, 6, 8, 10, 12, 16, 18, 32}) out.push_back(dihedral_group(o));
  for (std::size_t o : {8, 16, 32}) out.push_back(quaternion_group(o));
  for (std::size_t o : {16, 32}) out.push_back(semidihedral_group(o));
  for (auto f : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}, {4, 4}})
    out.push_back(product_group(f));
  return out;
}

// rho(a) = sum_g a_g rho(g)
inline Matrix rep_of(const eqsym::RationalRep& rep, const eqsym::GroupAlgebraElement& a) {
  Matrix out(rep.dim(), rep.dim());
  for (std::size_t g = 0; g < a.coefficients().size(); ++g)
    if (a[g] != 0) out += a[g] * rep.matrix(g);
  return out;
}

// <a e_i, b e_i> == (n_i/|G|) tr(rho_i(a) rho_i(b)^*), n_i = dim/endo_dim and
// M^* = B M^T B^-1 the adjoint for the averaged invariant form B. Returns
// the first pair (a, b) index that fails, or -1.
inline long adjoint_trace_failure(const eqsym::GroupPtr& g, const std::vector<eqsym::RationalRep>& reps,
                                  const std::vector<eqsym::GroupAlgebraElement>& idem,
                                  const std::vector<eqsym::GroupAlgebraElement>& probes) {
  using namespace eqsym;
  long count = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Matrix b = averaged_invariant_form(reps[i]);
    Matrix binv = b.inverse();
    Rational n = make_rational(static_cast<long>(reps[i].dim()), static_cast<long>(*reps[i].endo_dim()));
    for (const auto& x : probes)
      for (const auto& y : probes) {
        auto xa = x * idem[i], ya = y * idem[i];
        Matrix rx = rep_of(reps[i], xa), ry = rep_of(reps[i], ya);
        Rational rhs = n / static_cast<long>(g->order()) * (rx * b * ry.transpose() * binv).trace();
        if (trace_pairing(xa, ya) != rhs) return count;
        ++count;
      }
  }
  return -1;
}

struct ReductionInstance {
  eqsym::SymplecticGModule module;
  eqsym::Subspace i, j;
};

// Small modules for the reduction suites: hyperbolic modules over sums of
// catalog reps, plus H^1 of a few low-dimensional covers.
inline std::vector<eqsym::SymplecticGModule> reduction_pool() {
  std::vector<eqsym::SymplecticGModule> pool;
  for (const char* name : {"C2", "C3", "C4", "S3", "D8", "Q8", "C2xC2"}) {
    auto g = eqsym::group_by_name(name);
    auto reps = eqsym::catalog_reps(g);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      pool.push_back(eqsym::hyperbolic(reps[a]));
      std::size_t b = (a + 1) % reps.size();
      pool.push_back(eqsym::hyperbolic(reps[a].direct_sum(reps[b], "sum")));
    }
  }
  for (const auto& c : eqsym::cover_corpus(0, 0)) {
    auto v = eqsym::symplectic_module_of_cover(eqsym::build_cover(c.spec));
    if (v.dim() <= 10) pool.push_back(v);
  }
  return pool;
}

inline ReductionInstance reduction_instance(const std::vector<eqsym::SymplecticGModule>& pool, Gen& gen) {
  const auto& v = pool[gen.integer(0, static_cast<long>(pool.size()) - 1)];
  auto i = random_invariant_isotropic(v, gen, gen.integer(0, 4));
  auto j = gen.coin(0.2) ? i : random_invariant_isotropic(v, gen, gen.integer(0, 4));
  return {v, i, j};
}

}  // namespace oracle
