#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqsym/group.hpp"
#include "eqsym/matrix.hpp"
#include "eqsym/repcat.hpp"
#include "eqsym/subspace.hpp"

namespace eqsym {

/// Raised when an exact post-check of a constructed certificate fails.
/// For inputs that satisfy the preconditions this signals a bug (the
/// construction guarantees success).
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite-dimensional Q-vector space with a nondegenerate skew form and
/// a form-preserving action of G.
///
/// Vectors are rows. The action matrices satisfy A_gh = A_g A_h and g
/// moves v to v A_g; invariance of the form reads A_g Omega A_g^T = Omega.
class SymplecticGModule {
 public:
  /// Validates skewness, invertibility, the homomorphism property and
  /// invariance exhaustively over G. Throws std::invalid_argument.
  SymplecticGModule(GroupPtr group, Matrix omega, std::vector<Matrix> action);

  /// Builds the action from generator images (extended along words).
  static SymplecticGModule from_generators(GroupPtr group, Matrix omega,
                                           const std::vector<Matrix>& generator_images);

  /// Standard form on Q^(2n): pairs (e1,e2), (e3,e4), ... with
  /// omega(e_{2i-1}, e_{2i}) = 1, trivial action unless given.
  static Matrix standard_form(std::size_t pairs);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return omega_.rows(); }
  const Matrix& omega() const { return omega_; }
  const Matrix& action(std::size_t g) const { return action_[g]; }
  const std::vector<Matrix>& actions() const { return action_; }

  Rational form(std::span<const Rational> u, std::span<const Rational> w) const {
    return bilinear(u, omega_, w);
  }

  bool is_invariant(const Subspace& s) const;

  /// Restriction to an invariant subspace on which the form is nondegenerate,
  /// in the coordinates of s.basis().
  SymplecticGModule restrict_to(const Subspace& s) const;

 private:
  GroupPtr group_;
  Matrix omega_;
  std::vector<Matrix> action_;
};

struct CertificateChecks {
  bool dimension = false;
  bool isotropic = false;
  bool invariant = false;
  bool all() const { return dimension && isotropic && invariant; }
};

/// A G-invariant Lagrangian together with the checks that were rerun on it.
struct LagrangianCertificate {
  Subspace lagrangian;
  CertificateChecks checks;
  std::string provenance;
};

Subspace perp(const SymplecticGModule& v, const Subspace& s);

struct SubspaceClass {
  bool isotropic = false;
  bool coisotropic = false;
  bool lagrangian = false;
  bool g_invariant = false;
};
SubspaceClass classify_subspace(const SymplecticGModule& v, const Subspace& s);

/// I^perp / I for a G-invariant I contained in its perpendicular.
struct CoisotropicReduction {
  SymplecticGModule module;
  Subspace coisotropic;   // I^perp
  Matrix complement;      // rows spanning a complement of I inside I^perp (W's basis lifted)
  Matrix projection;      // ambient x dim(W); on I^perp, v -> v * projection is the quotient map
  Subspace isotropic;     // I

  /// Preimage of a subspace of W: I + (lift of s).
  Subspace pull_back(const Subspace& s) const;
};
CoisotropicReduction coisotropic_reduction(const SymplecticGModule& v, const Subspace& i);

SymplecticGModule opposite(const SymplecticGModule& v);
SymplecticGModule direct_sum(const SymplecticGModule& v, const SymplecticGModule& w);
/// L + L^* with form [[0, I], [-I, 0]] and action blockdiag(rho(g), rho(g)^-T).
SymplecticGModule hyperbolic(const RationalRep& rep);

/// Ind from H to G over right cosets Hr, representatives the minimal index
/// per coset in ascending order. `embedding` maps H indices into G.
SymplecticGModule induction(const SymplecticGModule& v, const GroupPtr& g,
                            const std::vector<std::size_t>& embedding);
/// Minimal-index representatives of the right cosets H r, ascending.
std::vector<std::size_t> right_coset_representatives(const FiniteGroup& g,
                                                     const std::vector<std::size_t>& embedding);

/// omega_G(x, y) = sum_g omega(x, y A_g) g.
GroupAlgebraElement group_ring_form(const SymplecticGModule& v, std::span<const Rational> x,
                                    std::span<const Rational> y);

/// Recomputes dimension, isotropy and invariance from scratch.
struct CertificateFailure {
  std::string property;       // "dimension", "isotropy", "invariance" or "ambient"
  std::string detail;
  Vector witness_a, witness_b;  // offending pair (isotropy) or vector and its image (invariance)
};
struct VerificationResult {
  std::optional<LagrangianCertificate> certificate;
  std::optional<CertificateFailure> failure;
  bool ok() const { return certificate.has_value(); }
};
VerificationResult verify_certificate(const SymplecticGModule& v, const Subspace& l,
                                      std::string provenance = "verify");
/// verify_certificate that throws VerificationFailure on any failed check.
LagrangianCertificate certify(const SymplecticGModule& v, const Subspace& l, std::string provenance);

/// The image of I^perp ∩ J^perp in (I^perp/I) ⊕ -(J^perp/J), certified.
struct KaroubiResult {
  SymplecticGModule module;
  LagrangianCertificate certificate;
};
KaroubiResult karoubi_lagrangian(const SymplecticGModule& v, const Subspace& i, const Subspace& j);

/// Some Lagrangian transverse to L (not necessarily invariant), built from
/// the non-pivot coordinate directions of L and corrected to be isotropic.
Subspace transverse_lagrangian(const SymplecticGModule& v, const Subspace& l);

/// A G-invariant Lagrangian M with L ∩ M = 0, obtained by averaging the
/// translates of a transverse Lagrangian as graphs of maps into L.
LagrangianCertificate transverse_invariant_lagrangian(const SymplecticGModule& v, const Subspace& l);

/// A Lagrangian (no invariance requirement) built by greedy isotropic
/// extension along the given subspace's basis; s must be a nondegenerate
/// subspace and the result is a Lagrangian of v restricted to s.
Subspace greedy_lagrangian(const SymplecticGModule& v, const Subspace& s);

}  // namespace eqsym
