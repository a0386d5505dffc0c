#pragma once

#include <cstddef>
#include <vector>

#include "eqsym/matrix.hpp"

namespace eqsym {

struct Echelon {
  Matrix reduced;                   // unique reduced row-echelon form, zero rows kept
  std::vector<std::size_t> pivots;  // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix& m);

/// rref together with an invertible T such that T * m == reduced.
struct EchelonWithTransform {
  Echelon echelon;
  Matrix transform;
};
EchelonWithTransform rref_with_transform(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Right inverse X of a full-row-rank matrix K (K * X == I).
Matrix right_inverse(const Matrix& k);

/// A subspace of Q^n, stored as the nonzero rows of its reduced
/// row-echelon basis. Two subspaces are equal as sets iff the stored
/// bases are entry-wise equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Row span of `generators` (which may be dependent).
  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(std::span<const Rational> v) const;

  /// Image under v -> v * a.
  Subspace image(const Matrix& a) const;
  bool is_invariant(const Matrix& a) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m * v^T = 0}
Subspace kernel(const Matrix& m);

/// Row space of the image of v -> v * m (the row space of m).
Subspace row_space(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Rows of `within` completing `base` to a basis of `within`, picked
/// greedily from within.basis() in row order. Requires base ⊆ within.
Matrix complement_basis(const Subspace& within, const Subspace& base);

struct SubspaceRelations {
  Subspace sum;
  Subspace intersection;
  bool b_in_a = false;
  /// Defined when b_in_a: a matrix Q (ambient x (dim a - dim b)) whose
  /// restriction v -> v * Q to `a` is onto the coordinate space with
  /// kernel exactly b.
  Matrix quotient_map;
};

/// Throws std::invalid_argument on ambient dimension mismatch.
SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace eqsym
