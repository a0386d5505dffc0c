#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsym/repcat.hpp"
#include "eqsym/subspace.hpp"
#include "eqsym/sympmod.hpp"

namespace eqsym {

enum class Strategy { field_symplectic, orbit_reduce, enumerate };

std::string strategy_name(Strategy s);
/// Throws std::invalid_argument for unknown names.
Strategy parse_strategy(const std::string& name);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t height_bound = 4;
  std::size_t max_iterations = 100000;
  std::vector<Strategy> strategies{Strategy::field_symplectic, Strategy::orbit_reduce,
                                   Strategy::enumerate};
  void validate() const;
};

/// Rationals of height at most h (max of |numerator| and denominator),
/// ordered by height, then denominator, then |numerator|, positive first.
std::vector<Rational> rationals_up_to_height(std::size_t h);

/// Nonzero vectors of Q^dim with height at most `bound`, by increasing
/// height and then lexicographically in the value order above. A nonzero
/// seed permutes the coordinate positions deterministically.
class HeightEnumerator {
 public:
  HeightEnumerator(std::size_t dim, std::size_t bound, std::uint64_t seed = 0);
  /// Writes the next vector; false once every vector has been produced.
  bool next(Vector& out);

 private:
  std::size_t dim_, bound_, height_ = 1;
  std::vector<Rational> values_;
  std::vector<std::size_t> counts_;  // counts_[h] = number of values of height <= h
  std::vector<std::size_t> digits_, order_;
  bool started_ = false;
};

struct Block {
  std::string label;
  Subspace space;
  std::optional<std::size_t> rep;  // catalog index
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  bool certified_orthogonal = false;
};

/// Images of the central idempotents (v -> v * sum c_g A_g). Verifies
/// invariance, pairwise orthogonality and that the blocks sum to V;
/// throws std::logic_error with the offending pair otherwise.
BlockDecomposition isotypic_blocks(const SymplecticGModule& v, const std::vector<RationalRep>& reps);

struct BlockReport {
  std::string label;
  std::size_t dim = 0;
  std::string strategy;  // the one that succeeded, or "exhausted"
  std::size_t iterations = 0;
};

struct SearchResult {
  std::optional<LagrangianCertificate> certificate;
  std::vector<BlockReport> blocks;
  std::string message;
  bool ok() const { return certificate.has_value(); }
};

/// Splits into isotypic blocks (with `reps`, or the built-in catalog when
/// reps is empty and one exists), searches each block with the configured
/// strategies and certifies the direct sum of the block Lagrangians on V.
/// Exhaustion is reported in the result, not thrown.
SearchResult find_invariant_lagrangian(const SymplecticGModule& v,
                                       const std::optional<std::vector<RationalRep>>& reps,
                                       const SearchConfig& cfg);

struct WittResult {
  bool equivalent = false;
  SymplecticGModule sum;  // V ⊕ -W, where the certificate lives
  SearchResult search;
};

/// Semi-decision: true with a certificate on V ⊕ -W, or an exhaustion report.
/// Throws std::invalid_argument when the groups differ.
WittResult witt_equivalent(const SymplecticGModule& v, const SymplecticGModule& w, const SearchConfig& cfg,
                           const std::optional<std::vector<RationalRep>>& reps = std::nullopt);

}  // namespace eqsym
