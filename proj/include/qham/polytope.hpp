#pragma once

#include <vector>

#include "qham/cone.hpp"
#include "qham/euclid.hpp"

namespace qham {

// Exact face lattice of a bounded rational polytope given by its vertices.
// Everything is combinatorial-exact: facets are found by enumerating
// supporting hyperplanes through vertex subsets, faces by closing the facet
// vertex sets under intersection.  Intended for the small polytopes of this
// library (alcoves and momentum polytopes, a handful of vertices in
// dimension <= 8).

struct PolyFace {
  std::vector<int> vertices;  // sorted indices into Polytope::vertices()
  int dim = 0;
};

class Polytope {
 public:
  // Convex hull of the given points (rows).  Duplicates and non-extreme
  // points are dropped; the survivors keep their input order.  Throws
  // std::invalid_argument when no points are given.
  static Polytope from_vertices(const QMat& points);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const QMat& vertices() const { return verts_; }

  // All nonempty faces, sorted by (dimension, vertex list); the polytope
  // itself is the unique face of full dimension and sorts last.
  const std::vector<PolyFace>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int top_face() const { return face_count() - 1; }
  // Face containment f <= g (vertex-set inclusion).
  bool face_subset(int f, int g) const;

  // H-representation: facet rows a.x >= b plus affine-hull rows a.x == b.
  const std::vector<Constraint>& facet_inequalities() const { return facets_; }
  const std::vector<Constraint>& hull_equalities() const { return hull_; }

  bool contains(const QVec& x) const { return face_of(x) >= 0; }
  // Index of the smallest face containing x, or -1 when x lies outside.
  int face_of(const QVec& x) const;

  // Barycenter of the face's vertices (a relative-interior point).
  QVec relative_interior_point(int face) const;

 private:
  Polytope() = default;

  int ambient_dim_ = 0;
  int dim_ = 0;
  QMat verts_;
  std::vector<PolyFace> faces_;
  std::vector<Constraint> facets_;
  std::vector<std::vector<int>> facet_vertices_;  // parallel to facets_
  std::vector<Constraint> hull_;
};

}  // namespace qham
