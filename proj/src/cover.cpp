#include "eqsym/cover.hpp"

#include <stdexcept>
#include <string>

namespace eqsym {

std::vector<std::pair<std::size_t, int>> surface_relator(std::size_t genus) {
  std::vector<std::pair<std::size_t, int>> w;
  for (std::size_t i = 0; i < genus; ++i) {
    w.push_back({2 * i, 1});
    w.push_back({2 * i + 1, 1});
    w.push_back({2 * i, -1});
    w.push_back({2 * i + 1, -1});
  }
  return w;
}

namespace {

void check_spec_shape(const CoverSpec& spec) {
  if (!spec.group) throw std::invalid_argument("cover: missing group");
  if (spec.base_genus < 1) throw std::invalid_argument("cover: base genus must be at least 1");
  if (spec.monodromy.size() != 2 * spec.base_genus)
    throw std::invalid_argument("cover: expected " + std::to_string(2 * spec.base_genus) +
                                " monodromy images, got " + std::to_string(spec.monodromy.size()));
  for (auto m : spec.monodromy)
    if (m >= spec.group->order()) throw std::invalid_argument("cover: monodromy index out of range");
}

// prefix[k] = image of the first k letters of the boundary word.
std::vector<std::size_t> boundary_prefixes(const CoverSpec& spec) {
  const auto& g = *spec.group;
  auto word = surface_relator(spec.base_genus);
  std::vector<std::size_t> prefix{g.identity()};
  for (auto [gen, e] : word) {
    std::size_t x = spec.monodromy[gen];
    prefix.push_back(g.mul(prefix.back(), e > 0 ? x : g.inv(x)));
  }
  return prefix;
}

}  // namespace

bool satisfies_surface_relation(const CoverSpec& spec) {
  check_spec_shape(spec);
  return boundary_prefixes(spec).back() == spec.group->identity();
}

Matrix CoverComplex::coboundary0() const {
  Matrix d(vertices_, edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    d(edge_ends_[e][1], e) += 1;
    d(edge_ends_[e][0], e) -= 1;
  }
  return d;
}

Matrix CoverComplex::coboundary1() const {
  Matrix d(edge_count(), triangle_count());
  for (std::size_t t = 0; t < triangle_count(); ++t) {
    const auto& f = tri_edges_[t];
    d(f[0], t) += 1;
    d(f[1], t) -= 1;
    d(f[2], t) += 1;
  }
  return d;
}

std::size_t CoverComplex::translate_edge(std::size_t k, std::size_t e) const {
  std::size_t sheet = e / base_edges_, base = e % base_edges_;
  return spec_.group->mul(k, sheet) * base_edges_ + base;
}

CoverComplex build_cover(const CoverSpec& spec, const CoverOptions& options) {
  check_spec_shape(spec);
  const auto& g = *spec.group;
  const std::size_t h = spec.base_genus, n = g.order();
  auto prefix = boundary_prefixes(spec);
  if (prefix.back() != g.identity())
    throw std::invalid_argument("cover: monodromy violates the surface relation [a1,b1]...[ah,bh] = e");
  bool connected = generates(g, spec.monodromy);
  if (!connected && options.require_connected)
    throw std::invalid_argument(
        "cover: monodromy images do not generate the group; pass the generated subgroup instead");

  auto word = surface_relator(h);
  const std::size_t corners = 4 * h;
  CoverComplex c;
  c.spec_ = spec;
  c.vertices_ = n;
  c.base_edges_ = 2 * h + (corners - 3);
  c.base_triangles_ = corners - 2;

  auto diagonal = [&](std::size_t j) { return 2 * h + (j - 2); };  // edge from corner 0 to corner j
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < 2 * h; ++i)
      c.edge_ends_.push_back({s, g.mul(s, spec.monodromy[i])});
    for (std::size_t j = 2; j + 2 <= corners; ++j) c.edge_ends_.push_back({s, g.mul(s, prefix[j])});
  }
  auto cell = [&](std::size_t s, std::size_t base) { return s * c.base_edges_ + base; };

  for (std::size_t s = 0; s < n; ++s) {
    // corner k of sheet s carries the vertex label s * prefix[k]
    auto label = [&](std::size_t k) { return g.mul(s, prefix[k % corners]); };
    // polygon edge between corners k and k+1
    auto side = [&](std::size_t k) {
      auto [gen, e] = word[k];
      return cell(e > 0 ? label(k) : label(k + 1), gen);
    };
    auto spoke = [&](std::size_t j) {
      if (j == 1) return side(0);
      if (j == corners - 1) return side(corners - 1);
      return cell(s, diagonal(j));
    };
    for (std::size_t j = 1; j + 1 < corners; ++j) {
      std::size_t v0 = label(0), a = label(j), b = label(j + 1);
      std::size_t e0a = spoke(j), e0b = spoke(j + 1), eab = side(j);
      if (word[j].second > 0) {
        c.tri_vertices_.push_back({v0, a, b});
        c.tri_edges_.push_back({eab, e0b, e0a});
      } else {
        c.tri_vertices_.push_back({v0, b, a});
        c.tri_edges_.push_back({eab, e0a, e0b});
      }
    }
  }

  if (c.vertex_count() != n || c.edge_count() != n * (6 * h - 3) || c.triangle_count() != n * (4 * h - 2))
    throw std::logic_error("cover: unexpected cell counts");
  if (c.euler_characteristic() != static_cast<long>(n) * (2 - 2 * static_cast<long>(h)))
    throw std::logic_error("cover: Euler characteristic mismatch");
  // each face [vi vj] must run from vi to vj
  for (std::size_t t = 0; t < c.triangle_count(); ++t) {
    const auto& v = c.tri_vertices_[t];
    const auto& f = c.tri_edges_[t];
    auto ok = [&](std::size_t e, std::size_t from, std::size_t to) {
      return c.edge_ends_[e][0] == from && c.edge_ends_[e][1] == to;
    };
    if (!ok(f[0], v[1], v[2]) || !ok(f[1], v[0], v[2]) || !ok(f[2], v[0], v[1]))
      throw std::logic_error("cover: incoherent face in triangle " + std::to_string(t));
  }

  Matrix d0 = c.coboundary0(), d1 = c.coboundary1();
  c.components_ = n / subgroup_generated(g, spec.monodromy).embedding.size();
  c.h0_ = n - rank(d0);
  c.h2_ = c.triangle_count() - rank(d1);
  if (c.h0_ != c.components_ || c.h2_ != c.components_)
    throw std::logic_error("cover: H^0 or H^2 rank does not match the number of components");

  // Base fundamental cycle: the kernel of the base coboundary is one line.
  CoverSpec trivial{h, cyclic_group(1), std::vector<std::size_t>(2 * h, 0)};
  Vector base_class;
  if (n == 1) {
    Subspace z = kernel(d1);
    if (z.dim() != 1) throw std::logic_error("cover: base H_2 is not one-dimensional");
    base_class = z.basis().row_copy(0);
  } else {
    base_class = build_cover(trivial).fundamental_class();
  }
  Rational lead = base_class[0];
  if (lead == 0) throw std::logic_error("cover: fundamental cycle vanishes on the first triangle");
  c.fundamental_.assign(c.triangle_count(), Rational(0));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < c.base_triangles_; ++t)
      c.fundamental_[s * c.base_triangles_ + t] = base_class[t] / lead;
  if (!is_zero_vector(c.fundamental_ * d1.transpose()))
    throw std::logic_error("cover: lifted fundamental class is not a cycle");
  return c;
}

CoverModule cover_cohomology(const CoverComplex& complex) {
  const auto& g = *complex.spec().group;
  Matrix d0 = complex.coboundary0(), d1 = complex.coboundary1();
  Subspace z1 = kernel(d1.transpose());
  Subspace b1 = row_space(d0);
  Matrix hb = complement_basis(z1, b1);
  const std::size_t m = hb.rows();
  std::size_t expected = complex.components() * 2 +
                         (2 * complex.spec().base_genus - 2) * g.order();
  if (m != expected) throw std::logic_error("cover: H^1 has unexpected dimension");

  // coordinates modulo coboundaries: z = (z X) K for z in the row space of K
  Matrix k = vstack(b1.basis(), hb);
  Matrix x = right_inverse(k);
  Matrix xh = x.select_cols(b1.dim(), m);

  std::vector<Matrix> action;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix pulled(m, complex.edge_count());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t e = 0; e < complex.edge_count(); ++e)
        pulled(i, e) = hb(i, complex.translate_edge(a, e));
    action.push_back(pulled * xh);
  }

  const auto& fc = complex.fundamental_class();
  const auto& faces = complex.triangle_faces();
  Matrix front(m, complex.triangle_count()), back(m, complex.triangle_count());
  for (std::size_t t = 0; t < complex.triangle_count(); ++t)
    for (std::size_t i = 0; i < m; ++i) {
      front(i, t) = fc[t] * hb(i, faces[t][2]);
      back(i, t) = hb(i, faces[t][0]);
    }
  Matrix omega = front * back.transpose();
  return CoverModule{SymplecticGModule(complex.spec().group, std::move(omega), std::move(action)), hb};
}

SymplecticGModule symplectic_module_of_cover(const CoverComplex& complex) {
  return cover_cohomology(complex).module;
}

TwistedDims twisted_homology_dims(const CoverSpec& spec, const RationalRep& rep) {
  check_spec_shape(spec);
  if (rep.group() != spec.group)
    throw std::invalid_argument("twisted_homology_dims: representation is over a different group");
  const std::size_t h = spec.base_genus, d = rep.dim();
  auto word = surface_relator(h);
  auto prefix = boundary_prefixes(spec);
  // Fox derivative of the relator in generator j, pushed through rep:
  // x contributes prefix_k, x^-1 contributes -prefix_{k+1}.
  std::vector<Matrix> fox(2 * h, Matrix(d, d));
  for (std::size_t k = 0; k < word.size(); ++k) {
    auto [gen, e] = word[k];
    if (e > 0)
      fox[gen] = fox[gen] + rep.matrix(prefix[k]);
    else
      fox[gen] = fox[gen] - rep.matrix(prefix[k + 1]);
  }
  Matrix d2(d, 0), d1(0, d);
  for (std::size_t j = 0; j < 2 * h; ++j) {
    d2 = hstack(d2, fox[j]);
    d1 = vstack(d1, rep.matrix(spec.monodromy[j]) - Matrix::identity(d));
  }
  if (!(d2 * d1).is_zero()) throw std::logic_error("twisted complex: boundary of boundary is nonzero");
  std::size_t r1 = rank(d1), r2 = rank(d2);
  return TwistedDims{d - r1, 2 * h * d - r1 - r2, d - r2};
}

}  // namespace eqsym
