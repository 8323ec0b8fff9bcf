#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qham/linalg.hpp"

namespace qham {

// Exact affine geometry over a rational vector space with a fixed scalar
// product.  Points and vectors are rational coordinate tuples relative to a
// chosen basis and origin; the scalar product is <u, v> = u^T G v for a
// symmetric positive definite Gram matrix G.

using RationalVector = QVec;
using AffinePoint = QVec;

class MetricSpace {
 public:
  // factor_scales record the per-simple-factor scaling of the invariant
  // form when the space belongs to a product group; they are bookkeeping
  // for serialization and must all be positive.
  explicit MetricSpace(QMat gram, std::vector<Rat> factor_scales = {});

  int dim() const { return static_cast<int>(gram_.size()); }
  const QMat& gram() const { return gram_; }
  const QMat& gram_inv() const { return gram_inv_; }
  const std::vector<Rat>& factor_scales() const { return factor_scales_; }

  Rat inner(const QVec& u, const QVec& v) const;  // u^T G v
  Rat norm2(const QVec& u) const { return inner(u, u); }

 private:
  QMat gram_;
  QMat gram_inv_;
  std::vector<Rat> factor_scales_;
};

// An affine-linear function a(x) = constant + <gradient, x>.  The gradient
// is stored as a coordinate vector; pairings against it go through the
// metric.
struct AffineFunctional {
  RationalVector gradient;
  Rat constant;

  bool operator==(const AffineFunctional&) const = default;
};

Rat evaluate(const MetricSpace& space, const AffineFunctional& f,
             const AffinePoint& x);

// Builds the functional with the coordinate formula
// f(x) = constant + sum_i coeffs[i] * x_i  (gradient = G^{-1} coeffs).
AffineFunctional functional_from_coordinates(const MetricSpace& space,
                                             const QVec& coeffs,
                                             const Rat& constant);
// Inverse of the above: coefficients of the coordinate formula (G * grad).
QVec coordinate_form(const MetricSpace& space, const AffineFunctional& f);

// 2 grad / |grad|^2; throws std::domain_error on zero gradient.
RationalVector coroot(const MetricSpace& space, const AffineFunctional& f);

// s_f(x) = x - f(x) * coroot(f).
AffinePoint reflect_point(const MetricSpace& space, const AffineFunctional& f,
                          const AffinePoint& x);

// s_f(g) = g - <grad g, coroot(f)> * f.
AffineFunctional reflect_functional(const MetricSpace& space,
                                    const AffineFunctional& f,
                                    const AffineFunctional& g);

// ---------------------------------------------------------------------------
// Lattices: finitely generated subgroups of the rational vector space.
// Canonical form is (1/denom) * H with H an integral Hermite-form basis and
// denom the minimal positive integer clearing all denominators; equality of
// canonical forms is equality of lattices.

class Lattice {
 public:
  static Lattice from_generators(int ambient_dim, const QMat& generators);
  static Lattice zero(int ambient_dim);
  static Lattice standard(int dim);  // Z^dim

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return static_cast<int>(int_basis_.size()); }
  bool is_zero() const { return int_basis_.empty(); }

  // Canonical rational basis rows (rank x ambient_dim).
  QMat basis() const;
  Int denom() const { return denom_; }
  const IMat& int_basis() const { return int_basis_; }

  bool contains(const QVec& v) const;
  bool contains_lattice(const Lattice& other) const;
  Lattice scaled(const Rat& c) const;

  bool operator==(const Lattice&) const = default;

 private:
  int ambient_dim_ = 0;
  Int denom_ = 1;
  IMat int_basis_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

// {x : <L, x> in Z}; requires L full rank in the space (throws
// std::domain_error otherwise).
Lattice dual_lattice(const MetricSpace& space, const Lattice& l);

// Dual taken inside span(L): the unique basis of span(L) pairing integrally
// and dually with L.  Agrees with dual_lattice when L is full rank.
Lattice dual_in_span(const MetricSpace& space, const Lattice& l);

// Invariant factors of A/B; throws std::domain_error unless B is a
// sublattice of A.  B may have smaller rank (quotient gains a free part).
AbelianGroup lattice_quotient(const Lattice& a, const Lattice& b);

// Integer coordinates of v in the canonical basis of L, if v lies in L.
std::optional<IVec> coordinates_in_lattice(const Lattice& l, const QVec& v);

// The shortest lattice vector on the ray {t * direction : t > 0}, if the
// direction lies in the rational span of L.
std::optional<QVec> primitive_in_lattice(const Lattice& l, const QVec& direction);

// The sublattice of L lying in the rational span of the given rows.
Lattice lattice_intersect_subspace(const Lattice& l, const QMat& span_rows);

// Matrix P (acting on row vectors, x -> x * P) of the metric-orthogonal
// projection onto the span of the given rows.
QMat projection_onto_span(const MetricSpace& space, const QMat& span_rows);

// Image of a lattice under a row-acting linear map.
Lattice map_lattice(const Lattice& l, const QMat& p);

// ---------------------------------------------------------------------------
// Plain-string serialization of rational tuples ("p/q" entries), shared by
// the CLI and the JSON layer.

std::vector<std::string> vector_strings(const QVec& v);
QVec vector_from_strings(const std::vector<std::string>& parts);

}  // namespace qham
