#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "eqsym/group.hpp"
#include "eqsym/matrix.hpp"
#include "eqsym/repcat.hpp"
#include "eqsym/sympmod.hpp"

namespace eqsym {

/// A Galois G-cover of the closed genus-h surface, given by the images of
/// the standard generators a1, b1, ..., ah, bh of the surface group.
struct CoverSpec {
  std::size_t base_genus = 1;
  GroupPtr group;
  std::vector<std::size_t> monodromy;  // 2h element indices: a1, b1, a2, b2, ...
};

struct CoverOptions {
  /// Reject monodromy that does not generate G. When false the cover may be
  /// disconnected (one component per coset of the generated subgroup).
  bool require_connected = true;
};

/// The cover as a Delta-complex. The base is one vertex, the 2h loops and
/// the 4h-gon with boundary word a1 b1 a1^-1 b1^-1 ... fan-triangulated
/// from corner 0 (diagonals to corners 2..4h-2, triangles (0, j, j+1)).
/// Each cover cell is (sheet g, base cell) with index g * (#base cells) + c.
/// Triangle vertex order is corner 0 first, then the two other corners in
/// the direction of the polygon edge joining them.
class CoverComplex {
 public:
  const CoverSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edge_ends_.size(); }
  std::size_t triangle_count() const { return tri_edges_.size(); }
  long euler_characteristic() const {
    return static_cast<long>(vertices_) - static_cast<long>(edge_count()) +
           static_cast<long>(triangle_count());
  }
  std::size_t base_edges() const { return base_edges_; }
  std::size_t base_triangles() const { return base_triangles_; }

  /// (tail, head) vertex of each edge.
  const std::vector<std::array<std::size_t, 2>>& edge_ends() const { return edge_ends_; }
  /// Ordered vertices (v0, v1, v2) of each triangle.
  const std::vector<std::array<std::size_t, 3>>& triangle_vertices() const { return tri_vertices_; }
  /// Faces ([v1 v2], [v0 v2], [v0 v1]) of each triangle as edge indices.
  const std::vector<std::array<std::size_t, 3>>& triangle_faces() const { return tri_edges_; }

  /// Coboundaries in the row convention: f * delta0 = df, a * delta1 = da.
  Matrix coboundary0() const;
  Matrix coboundary1() const;

  /// Lift of the base fundamental cycle (first base triangle coefficient +1).
  const Vector& fundamental_class() const { return fundamental_; }

  std::size_t h0_rank() const { return h0_; }
  std::size_t h2_rank() const { return h2_; }
  std::size_t components() const { return components_; }

  /// Index of k * cell for an edge cell index.
  std::size_t translate_edge(std::size_t k, std::size_t e) const;

 private:
  friend CoverComplex build_cover(const CoverSpec&, const CoverOptions&);
  CoverSpec spec_;
  std::size_t vertices_ = 0;
  std::size_t base_edges_ = 0, base_triangles_ = 0;
  std::vector<std::array<std::size_t, 2>> edge_ends_;
  std::vector<std::array<std::size_t, 3>> tri_vertices_;
  std::vector<std::array<std::size_t, 3>> tri_edges_;
  Vector fundamental_;
  std::size_t h0_ = 0, h2_ = 0, components_ = 1;
};

/// Validates the surface relation and (by default) surjectivity, builds the
/// complex and checks cell counts, Euler characteristic, face coherence
/// and the ranks of H^0 and H^2. Throws std::invalid_argument on bad input.
CoverComplex build_cover(const CoverSpec& spec, const CoverOptions& options = {});

/// First cohomology of the cover as a symplectic G-module: the cup-product
/// pairing against the fundamental class, with the deck action by pullback
/// (g acts on a cochain by a -> a∘(left multiplication by g)).
struct CoverModule {
  SymplecticGModule module;
  Matrix cocycles;  // rows: representative cocycles of the chosen H^1 basis
};
CoverModule cover_cohomology(const CoverComplex& complex);
SymplecticGModule symplectic_module_of_cover(const CoverComplex& complex);

struct TwistedDims {
  std::size_t h0 = 0, h1 = 0, h2 = 0;
};
/// Homology of V -> V^(2h) -> V with boundary maps from Fox derivatives of
/// the surface relator evaluated through the monodromy and `rep`.
TwistedDims twisted_homology_dims(const CoverSpec& spec, const RationalRep& rep);

/// Boundary letters of the base polygon: (generator position, +-1).
std::vector<std::pair<std::size_t, int>> surface_relator(std::size_t genus);

/// Checks prod [a_i, b_i] = e under the monodromy.
bool satisfies_surface_relation(const CoverSpec& spec);

}  // namespace eqsym
