#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qham/polytope.hpp"
#include "qham/rootsys.hpp"

namespace qham {

// Component groups of twisted-centralizer tori over the alcove.  For a point
// x of the fundamental alcove, the roots vanishing at x cut out a subtorus
// whose component group is a finite invariant of the face containing x.
// When the integrality lattice splits as (root lattice) + (invariant part)
// -- "adjoint type" below -- that group is cyclic per infinite diagram
// component, of order the gcd of the diagram labels away from the vanishing
// set, and the groups over all faces of a polytope assemble into a
// constructible sheaf whose Cech cohomology this module computes exactly.

// ---------------------------------------------------------------------------
// Label arithmetic on one diagram component

// gcd of labels[j] over the j NOT listed in `vanishing`.  This is the order
// of the cyclic stalk attached to a face where exactly the listed simple
// roots vanish.  Throws std::invalid_argument when `vanishing` covers every
// index (the complement must be nonempty) or lists an index twice or out of
// range.
Int complement_label_gcd(const IVec& labels, const std::vector<int>& vanishing);

// The class in Z/d (d = complement_label_gcd) of sum_k labels[vanishing[k]]
// * coords[k]; coords is parallel to `vanishing`.  Returns the
// representative in [0, d).  This is the explicit surjection from integer
// tuples supported on the vanishing set onto the stalk.
Int stalk_class(const IVec& labels, const std::vector<int>& vanishing,
                const IVec& coords);

// ---------------------------------------------------------------------------
// Adjoint-type lattices

// Whether lambda = (lattice of root gradients) + (lambda ^ orthogonal
// complement of the gradients), a direct sum.  The label formulas for stalk
// orders are valid exactly for such lattices.
bool is_adjoint_lattice(const AffineRootSystem& rs, const Lattice& lambda);

// The adjoint replacement (gradient lattice) + (lambda ^ orthogonal
// complement); every integrality lattice is commensurable to its
// replacement, and the replacement is a fixed point of the operation.
Lattice adjoint_normalization(const AffineRootSystem& rs, const Lattice& lambda);

// ---------------------------------------------------------------------------
// Stalks and their restriction maps

// Per-component positions (into Component::root_indices) of the simple
// roots vanishing at x; x is folded into the alcove first.
std::vector<std::vector<int>> vanishing_sets(const AffineRootSystem& rs,
                                             const AffinePoint& x);

// Component group of the subtorus fixed by the roots vanishing at x, for
// the integrality lattice lambda.  For adjoint lambda this is the direct
// sum, over the infinite diagram components, of Z/d with d the
// complement_label_gcd of the component's vanishing set (finite components
// contribute nothing); for general lambda it falls back to the lattice
// formula of torus_fixed_group.  The overload without lambda uses
// rs.lambda().
AbelianGroup stalk_group(const AffineRootSystem& rs, const AffinePoint& x,
                         const Lattice& lambda);
AbelianGroup stalk_group(const AffineRootSystem& rs, const AffinePoint& x);

// Checks the restriction from the stalk at x to the stalk at y, where every
// simple root vanishing at y also vanishes at x (throws
// std::invalid_argument otherwise, and when lambda is not adjoint): per
// infinite component the order at y divides the order at x, and sending
// generator to generator commutes with the explicit stalk surjections --
// equivalently, labels indexed by the difference of the vanishing sets are
// divisible by the order at y.  A false return is a genuine counterexample,
// not a precondition failure.
bool restriction_check(const AffineRootSystem& rs, const Lattice& lambda,
                       const AffinePoint& x, const AffinePoint& y);

// Verifies exactness of
//   0 -> K -> dual(lambda) -> Z^(vanishing set) -> stalk -> 0
// at x, where K is the sublattice of dual(lambda) orthogonal to the
// vanishing gradients, the middle map pairs a dual vector with each
// vanishing gradient, and the last map is the label surjection
// (stalk_class) on each infinite component and zero on finite ones.
// Kernels and images are computed explicitly over Z and compared as
// lattices.  Requires lambda adjoint and full rank (throws
// std::invalid_argument / std::domain_error otherwise).
bool kernel_sequence_check(const AffineRootSystem& rs, const Lattice& lambda,
                           const AffinePoint& x);

// ---------------------------------------------------------------------------
// Constructible sheaves on a polytope's face complex

// One stalk, presented as Z^generators modulo the integer row span of
// `relations` (rows of length `generators`).
struct StalkPresentation {
  int generators = 0;
  IMat relations;

  AbelianGroup group() const;
};

// A sheaf constant on the open faces of a polytope: a stalk presentation
// per face (parallel to Polytope::faces()) and, for every comparable pair
// f < g of distinct faces, the generator matrix (row-acting: coordinate row
// of length stalks[f].generators times the matrix gives one of length
// stalks[g].generators) of the restriction from the smaller face's stalk
// toward the larger face's.
struct ConstructibleSheaf {
  explicit ConstructibleSheaf(Polytope face_complex)
      : complex(std::move(face_complex)) {}

  Polytope complex;
  std::vector<StalkPresentation> stalks;
  std::map<std::pair<int, int>, IMat> restrictions;
};

// Checks shapes, that every restriction sends relations into relations, and
// that restrictions compose compatibly (modulo relations) along chains of
// faces; throws std::invalid_argument("incompatible restriction data: ...")
// on any violation.
void validate_sheaf(const ConstructibleSheaf& sheaf);

// The same stalk on every face, identity restrictions.
ConstructibleSheaf constant_sheaf(Polytope complex, StalkPresentation stalk);

// The given stalk on one face, zero elsewhere.
ConstructibleSheaf skyscraper_sheaf(Polytope complex, int face,
                                    StalkPresentation stalk);

// The centralizer-component sheaf over a convex subpolytope of the alcove,
// given by its vertex rows: one generator per infinite diagram component,
// stalk order at a face the complement_label_gcd of the face's vanishing
// set, restriction generator -> generator.  The stalk orders are the ones
// belonging to the adjoint normalization of rs's integrality lattice.
// Throws std::invalid_argument when a vertex lies outside the alcove.
ConstructibleSheaf band_sheaf(const AffineRootSystem& rs, const QMat& vertices);

// The subsheaf of elements killed by p^e (p prime, e >= 0): stalk order
// gcd(d, p^e) at a face of order d, with the induced restriction maps.
ConstructibleSheaf band_torsion_sheaf(const AffineRootSystem& rs,
                                      const QMat& vertices, Int p, int e);

// Cohomology of the Cech complex on the cover of the polytope by open stars
// of faces.  The nerve of that cover is the order complex of the face
// poset, so degree q carries one block per strict chain f_0 < ... < f_q,
// holding the stalk of the largest face; the differential alternates over
// chain-element drops, applying the restriction map when the largest face
// is dropped.  Returns H^0 .. H^dim (free parts allowed), computed by
// integer normal forms.  Validates the sheaf first.
std::vector<AbelianGroup> cech_cohomology(const ConstructibleSheaf& sheaf);

}  // namespace qham
