#pragma once

#include <string>
#include <vector>

#include "qham/euclid.hpp"
#include "qham/rootsys_data.hpp"

namespace qham {

// One irreducible piece of a simple-root list: the classified type, the
// indices of its roots inside simple_roots() (in seed node order, affine
// node first), the ambient coordinates its coordinate forms touch, and the
// diagram marks for affine pieces.
struct Component {
  TypeSpec spec;
  std::vector<int> root_indices;
  std::vector<int> coords;
  IVec labels;  // affine components only, parallel to root_indices
};

// Fundamental domain data.  `parts` is parallel to components(): an affine
// component contributes a simplex vertex list (in the metric span of its
// gradients, one vertex per omitted node, seed node order), a finite one a
// ray per node.  Distinct components have metric-orthogonal spans, so the
// full domain is the sum of the parts plus the lineality directions (the
// directions every root is constant on).  `reference` is the interior point
// used to fix root signs: the sum of the part barycenters and rays.
struct ComponentAlcove {
  QMat vertices;
  QMat rays;
};

struct Alcove {
  std::vector<ComponentAlcove> parts;
  QMat lineality;
  AffinePoint reference;
};

struct FoldResult {
  AffinePoint point;
  std::vector<int> word;  // simple-root indices, in order of application
};

// Axis-aligned rational box, used as the search region of enumerate_roots.
struct Box {
  QVec lo;
  QVec hi;
};

struct TorusFixedGroup {
  AbelianGroup pi0;
  int fixed_rank = 0;  // dimension of the identity component
};

// A finitely presented affine root system: a rational chart with an exact
// invariant form, simple roots as affine-rational functionals, and the
// integrality lattice Lambda.  Construction validates the axioms (integer
// Cartan pairings, nonpositive off-diagonal entries, no repeated or
// positively proportional roots, integrality of roots and coroots against
// Lambda) and classifies every connected component against the diagram
// tables, deriving the marks of affine components from the unique positive
// relation among their gradients.
class AffineRootSystem {
 public:
  // `declared` (optional) records the requested factor types; when given it
  // is checked against the classification, component by component.
  AffineRootSystem(MetricSpace space, std::vector<AffineFunctional> simple_roots,
                   Lattice lambda, std::vector<TypeSpec> declared = {});

  const MetricSpace& space() const { return space_; }
  const std::vector<AffineFunctional>& simple_roots() const { return simples_; }
  const Lattice& lambda() const { return lambda_; }
  const std::vector<Component>& components() const { return components_; }
  const Alcove& alcove() const { return alcove_; }
  int dim() const { return space_.dim(); }

  bool in_alcove(const AffinePoint& x) const;

 private:
  MetricSpace space_;
  std::vector<AffineFunctional> simples_;
  Lattice lambda_;
  std::vector<Component> components_;
  Alcove alcove_;
};

// Builds the product of the requested factors on disjoint coordinate slices,
// with Lambda the weight lattice (dual of the lattice spanned by the
// gradient coroots).  Throws std::invalid_argument on an unsupported type.
AffineRootSystem build_from_type(const std::vector<TypeSpec>& specs);

// All roots whose wall meets the region, one per opposite pair, signed
// positive at the alcove reference point, sorted by (gradient, constant).
// Found by walking alcove images of the base alcove across shared walls.
std::vector<AffineFunctional> enumerate_roots(const AffineRootSystem& rs,
                                              const Box& region);

// Reflects x into the fundamental alcove, always across the lowest-index
// violated wall; the word lists the reflections in application order.
FoldResult fold_to_alcove(const AffineRootSystem& rs, const AffinePoint& x);

// apply_word(rs, word, y) = s_{word[0]}( ... s_{word.back()}(y) ... ); it
// inverts fold_to_alcove: apply_word(rs, f.word, f.point) recovers x.
AffinePoint apply_word(const AffineRootSystem& rs, const std::vector<int>& word,
                       const AffinePoint& y);

// Simple roots vanishing at x (x is folded into the alcove first); these
// form a simple system of the full set of roots vanishing there.
std::vector<AffineFunctional> stabilizer_roots(const AffineRootSystem& rs,
                                               const AffinePoint& x);

// Dual of the span of the gradient coroots; throws std::domain_error when
// the gradients do not span the chart.
Lattice weight_lattice(const MetricSpace& space,
                       const std::vector<AffineFunctional>& roots);

// Component group and dimension of the subgroup of the torus
// (chart mod dual lattice of Lambda) fixed by the reflections in the given
// roots: pi0 = dual-in-span of the gradient lattice, modulo the projection
// of the dual of Lambda onto the span.  Lambda must be full rank.
TorusFixedGroup torus_fixed_group(const MetricSpace& space,
                                  const std::vector<AffineFunctional>& roots,
                                  const Lattice& lambda);
TorusFixedGroup torus_fixed_group(const AffineRootSystem& rs, const AffinePoint& x);

// Sums over the per-part vertex lists, one per choice of a vertex in every
// affine component ({0} when there is none).  Together with the rays and the
// lineality directions these generate the fundamental domain.
QMat alcove_vertices(const AffineRootSystem& rs);

// A point of the torus = chart coordinates modulo the dual lattice of Lambda.
struct TorusElement {
  QVec coords;
};

// Value in [0,1) of the affine functional chi on a, well defined modulo the
// dual lattice whenever chi's gradient lies in Lambda.
Rat character_phase(const MetricSpace& space, const AffineFunctional& chi,
                    const TorusElement& a);

bool same_torus_element(const MetricSpace& space, const Lattice& lambda,
                        const TorusElement& a, const TorusElement& b);

}  // namespace qham
