#include "eqsym/subspace.hpp"

#include <stdexcept>

namespace eqsym {

namespace {

// Gauss-Jordan on `a`, mirroring every row operation on `t` when given.
std::vector<std::size_t> reduce_in_place(Matrix& a, Matrix* t) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rational f, tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a(piv, j), a(r, j));
      if (t)
        for (std::size_t j = 0; j < t->cols(); ++j) swap((*t)(piv, j), (*t)(r, j));
    }
    if (a(r, c) != 1) {
      Rational inv = 1 / a(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0) a(r, j) *= inv;
      if (t)
        for (std::size_t j = 0; j < t->cols(); ++j)
          if ((*t)(r, j) != 0) (*t)(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        tmp = f * a(r, j);
        a(i, j) -= tmp;
      }
      if (t) {
        for (std::size_t j = 0; j < t->cols(); ++j) {
          if ((*t)(r, j) == 0) continue;
          tmp = f * (*t)(r, j);
          (*t)(i, j) -= tmp;
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  e.pivots = reduce_in_place(e.reduced, nullptr);
  return e;
}

EchelonWithTransform rref_with_transform(const Matrix& m) {
  EchelonWithTransform out{{m, {}}, Matrix::identity(m.rows())};
  out.echelon.pivots = reduce_in_place(out.echelon.reduced, &out.transform);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix right_inverse(const Matrix& k) {
  auto [ech, t] = rref_with_transform(k);
  if (ech.rank() != k.rows()) throw std::domain_error("right_inverse: rows are dependent");
  // R = T K and R P = I for the pivot selector P, hence K (P T) = I.
  Matrix x(k.cols(), k.rows());
  for (std::size_t j = 0; j < ech.pivots.size(); ++j)
    for (std::size_t c = 0; c < k.rows(); ++c) x(ech.pivots[j], c) = t(j, c);
  return x;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

Subspace Subspace::span(const Matrix& generators) {
  Echelon e = rref(generators);
  Subspace s;
  s.ambient_ = generators.cols();
  s.basis_ = e.reduced.select_rows(0, e.rank());
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  return span(Matrix::from_rows(generators, ambient));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  // Subtract the combination read off the pivot columns; v is inside iff nothing is left.
  Vector rest(v.begin(), v.end());
  Rational t;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational c = rest[pivots_[i]];
    if (c == 0) continue;
    auto b = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (b[j] == 0) continue;
      t = c * b[j];
      rest[j] -= t;
    }
  }
  return is_zero_vector(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw std::domain_error("Subspace::coordinates: vector not in subspace");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::image(const Matrix& a) const {
  if (a.rows() != ambient_) throw std::invalid_argument("Subspace::image: dimension mismatch");
  if (dim() == 0) return zero(a.cols());
  return span(basis_ * a);
}

bool Subspace::is_invariant(const Matrix& a) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(basis_.row(i) * a)) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return Subspace::zero(n);
  return Subspace::span(n, gens);
}

Subspace row_space(const Matrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Left kernel of [A; B]: pairs (x, y) with x A + y B = 0, so x A lies in both.
  Matrix stacked = vstack(a.basis(), b.basis());
  Subspace rel = kernel(stacked.transpose());
  if (rel.dim() == 0) return Subspace::zero(n);
  Matrix xs = rel.basis().select_cols(0, a.dim());
  return Subspace::span(xs * a.basis());
}

Matrix complement_basis(const Subspace& within, const Subspace& base) {
  if (!within.contains(base)) throw std::invalid_argument("complement_basis: base not contained");
  std::vector<Vector> picked;
  Subspace current = base;
  for (std::size_t i = 0; i < within.dim() && current.dim() < within.dim(); ++i) {
    auto r = within.basis().row(i);
    if (current.contains(r)) continue;
    picked.emplace_back(r.begin(), r.end());
    current = sum(current, Subspace::span(Matrix::row_vector(r)));
  }
  return Matrix::from_rows(picked, within.ambient_dim());
}

SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_ops: ambient dimension mismatch");
  SubspaceRelations out{sum(a, b), intersection(a, b), a.contains(b), {}};
  if (out.b_in_a) {
    Matrix comp = complement_basis(a, b);
    const std::size_t q = comp.rows();
    if (q == 0) {
      out.quotient_map = Matrix(a.ambient_dim(), 0);
    } else {
      Matrix x = right_inverse(vstack(b.basis(), comp));
      out.quotient_map = x.select_cols(b.dim(), q);
    }
  }
  return out;
}

}  // namespace eqsym
