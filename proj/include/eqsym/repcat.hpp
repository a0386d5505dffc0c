#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqsym/group.hpp"
#include "eqsym/matrix.hpp"
#include "eqsym/subspace.hpp"

namespace eqsym {

/// An element of Q[G], stored as one coefficient per group element.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group);
  GroupAlgebraElement(GroupPtr group, std::vector<Rational> coefficients);
  static GroupAlgebraElement basis_element(GroupPtr group, std::size_t g);
  static GroupAlgebraElement one(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t g) const { return coeffs_[g]; }

  /// Involution sum c_g g -> sum c_g g^-1.
  GroupAlgebraElement conjugate() const;
  bool is_central() const;
  bool is_zero() const;

  /// sum_g c_g * action[g]
  Matrix apply(const std::vector<Matrix>& action) const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

/// Trace pairing <a, b> = sum_g a_g b_g (the pairing with <g,h> = [g == h]).
Rational trace_pairing(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// A homomorphism g -> matrix(g) with matrix(g) * matrix(h) == matrix(g h).
class RationalRep {
 public:
  /// Extends generator images to the whole group and checks the
  /// homomorphism property exhaustively; throws std::invalid_argument
  /// when the images do not satisfy the group's relations.
  static RationalRep from_generators(GroupPtr group, const std::vector<Matrix>& generator_images,
                                     std::string label,
                                     std::optional<std::size_t> endo_dim = std::nullopt);
  static RationalRep from_matrices(GroupPtr group, std::vector<Matrix> matrices, std::string label,
                                   std::optional<std::size_t> endo_dim = std::nullopt);
  static RationalRep trivial(GroupPtr group);
  static RationalRep regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const Matrix& matrix(std::size_t g) const { return matrices_[g]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const std::string& label() const { return label_; }
  std::optional<std::size_t> endo_dim() const { return endo_dim_; }
  Rational character(std::size_t g) const { return matrices_[g].trace(); }

  /// Restriction to the submodule spanned by the column vectors
  /// {matrix(g) * u : g in G} for the given column vector u.
  RationalRep cyclic_submodule(const Vector& u, std::string label,
                               std::optional<std::size_t> endo_dim = std::nullopt) const;

  /// Pullback along a homomorphism from another group into this rep's group.
  RationalRep pullback(GroupPtr source, const std::vector<std::size_t>& hom, std::string label) const;

  /// Direct sum with another representation of the same group.
  RationalRep direct_sum(const RationalRep& other, std::string label) const;

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
  std::string label_;
  std::optional<std::size_t> endo_dim_;
};

/// Solution space {X : X A_g = A_g X for all g}, as flattened dim*dim vectors.
Subspace commutant(const std::vector<Matrix>& action, std::size_t dim);
std::size_t commutant_dim(const RationalRep& rep);

/// Companion matrix of the m-th cyclotomic polynomial: multiplication by a
/// primitive m-th root of unity zeta on Q(zeta) in the power basis, acting on
/// column coordinate vectors.
Matrix cyclotomic_companion(std::size_t m);
/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<long> cyclotomic_polynomial(std::size_t m);
std::size_t euler_phi(std::size_t m);

/// Complete list of pairwise non-isomorphic irreducible rational
/// representations for the supported families (cyclic, dihedral including
/// S3 = dihedral(6), semidihedral, generalized quaternion, products of
/// cyclic groups). Throws std::invalid_argument for unsupported groups.
std::vector<RationalRep> catalog_reps(const GroupPtr& group);

/// Sum over the catalog of dim^2 / endo_dim.
Rational artin_wedderburn_count(const std::vector<RationalRep>& reps);

/// e_i = (c_i/|G|) sum_g tr(rho_i(g^-1)) g with c_i = dim/endo_dim, each
/// validated (idempotent, central, orthogonal, complete, correct action on
/// every catalog rep). Throws std::invalid_argument for an incomplete catalog
/// and std::logic_error when a validation check fails.
std::vector<GroupAlgebraElement> central_idempotents(const GroupPtr& group,
                                                     const std::vector<RationalRep>& reps);

/// An idempotent f with f * e = f whose image in rep is a single copy of
/// the commutant (rank == endo_dim). Tries e, then e times the average over
/// <s> for s in index order; returns e itself when none qualifies.
GroupAlgebraElement primitive_idempotent(const RationalRep& rep, const GroupAlgebraElement& central);

/// (1/|G|) sum_g A_g A_g^T: symmetric positive definite, A_g B A_g^T = B.
Matrix averaged_invariant_form(const RationalRep& rep);

}  // namespace eqsym
