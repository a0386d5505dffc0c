#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqsym {

enum class Family { cyclic, dihedral, semidihedral, quaternion, product, custom };

std::string family_name(Family f);

struct FamilyTag {
  Family family = Family::custom;
  // cyclic: {n}; dihedral/semidihedral/quaternion: {order}; product: factor orders.
  std::vector<std::size_t> params;
};

/// Hard cap on group order; tables stay exhaustive below it.
inline constexpr std::size_t kMaxGroupOrder = 256;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its multiplication table. Elements are
/// indices 0..order-1; the enumeration order is fixed per constructor so
/// that every downstream certificate is reproducible.
///
/// Family enumerations:
///  - cyclic(n): index i is x^i.
///  - dihedral / semidihedral / quaternion with rotation x of order m:
///    index i + m*j is x^i y^j (j in {0,1}).
///  - product(n1, n2, ...): mixed radix, index i1 + n1*i2 + ... is
///    g1^i1 g2^i2 ...
///  - permutation generators: breadth-first discovery order.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity, inverses, associativity).
  /// Throws std::invalid_argument on any violation.
  static GroupPtr from_table(std::vector<std::vector<std::size_t>> table,
                             std::vector<std::size_t> generators, FamilyTag tag,
                             std::vector<std::string> generator_names = {});

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t pow(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const;

  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const FamilyTag& tag() const { return tag_; }

  /// Human-readable name of element a (a word in the generators).
  const std::string& element_name(std::size_t a) const { return names_[a]; }
  std::optional<std::size_t> find_element(const std::string& name) const;

  std::string describe() const;

 private:
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> names_;
  FamilyTag tag_;
};

GroupPtr cyclic_group(std::size_t n);
/// Dihedral group of the given order 2m (m >= 2); dihedral(6) is S3.
GroupPtr dihedral_group(std::size_t order);
/// Semidihedral group of order 2^n, n >= 4.
GroupPtr semidihedral_group(std::size_t order);
/// Generalized quaternion group of order 2^n, n >= 3.
GroupPtr quaternion_group(std::size_t order);
/// Direct product of cyclic groups of the given orders.
GroupPtr product_group(const std::vector<std::size_t>& factors);
/// Group generated by permutations of {0..k-1}.
GroupPtr permutation_group(const std::vector<std::vector<std::size_t>>& generators);

/// A word in the generators: (generator position, nonzero exponent).
struct GroupWord {
  std::vector<std::pair<std::size_t, long>> letters;
};

/// Parses words such as "x y^-1 x^2", "x*y" or "e"/"1" (empty).
/// Letter names are looked up in `names`.
GroupWord parse_word(const std::string& text, const std::vector<std::string>& names);

/// Evaluates w left to right with assignment[k] the image of letter k.
/// Throws std::invalid_argument when a letter has no assigned image.
std::size_t eval_word(const FiniteGroup& g, const GroupWord& w,
                      const std::vector<std::optional<std::size_t>>& assignment);

struct Subgroup {
  GroupPtr group;
  std::vector<std::size_t> embedding;  // subgroup index -> parent index
};

/// Closure of `gens` in g. A single generator yields a canonically
/// indexed cyclic group (index i is gens[0]^i).
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::size_t>& gens);

/// Smallest subgroup containing `elements` is the whole group.
bool generates(const FiniteGroup& g, const std::vector<std::size_t>& elements);

/// Same order and identical multiplication tables.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace eqsym
