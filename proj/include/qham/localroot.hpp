#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qham/polytope.hpp"
#include "qham/rootsys.hpp"

namespace qham {

// Reconstruction of integral affine root systems from wall data, and gluing
// of face-local root systems on a polytope into one global system.

// ---------------------------------------------------------------------------
// Simple-system test.  A family of affine functionals is accepted when every
// pair closes an angle pi - pi/l with l in {2,3,4,6} or is antiparallel
// (l = infinity), tested exactly via 4<g_i,g_j>^2 / (|g_i|^2 |g_j|^2) in
// {0,1,2,3,4} with <g_i,g_j> <= 0, and when some point evaluates strictly
// positive under all of them at once (exact LP).  Rejection is a verdict,
// not an error.
struct SimpleSystemReport {
  bool accepted = false;
  std::vector<Constraint> alcove;  // coordinate rows of {f_i >= 0} if accepted
  int first = -1, second = -1;     // offending pair otherwise
  Rat angle_measure;               // 4 cos^2 of the offending pair's angle
  std::string reason;              // empty when accepted
};

SimpleSystemReport validate_simple_system(const MetricSpace& space,
                                          const std::vector<AffineFunctional>& walls);

// ---------------------------------------------------------------------------
// Wall scaling ambiguity.  A wall functional pi (gradient primitive in
// lambda) admits both pi and 2*pi as an integral simple root exactly when
// <lambda, coroot(pi)> = 2Z.  Returns the indices of such walls; throws
// std::invalid_argument when some gradient is not primitive in lambda.
std::vector<int> ambiguous_reflections(const MetricSpace& space,
                                       const std::vector<AffineFunctional>& walls,
                                       const Lattice& lambda);

// The integral system with simple roots 2*pi_s for s in doubled and pi_s
// otherwise.  doubled must consist of ambiguous walls (std::invalid_argument
// otherwise); the constructor validates the rest.  Together with
// doubled_simple_roots this realizes the bijection between subsets of the
// ambiguous walls and integral systems sharing the walls' reflection group.
AffineRootSystem root_system_from_walls(const MetricSpace& space,
                                        const std::vector<AffineFunctional>& walls,
                                        const Lattice& lambda,
                                        const std::vector<int>& doubled);

// Indices of the simple roots equal to twice a lambda-primitive functional.
std::vector<int> doubled_simple_roots(const AffineRootSystem& rs);

// ---------------------------------------------------------------------------
// Face-local root systems.

// Closure of the given functionals under all reflections they generate
// (finitely many roots assumed); includes both signs, sorted by
// (gradient, constant).
std::vector<AffineFunctional> reflection_closure(
    const MetricSpace& space, const std::vector<AffineFunctional>& seed);

// A polytope carrier with a finite root system attached to every face,
// constant on relative interiors.  Valid data satisfies:
//  (a) every attached set is a reflection-closed, crystallographic root
//      system whose roots vanish on their face and pair integrally with
//      lambda (roots in lambda, coroots integral on it);
//  (b) faces agree: the system of a face is exactly the subset of any
//      incident vertex's system vanishing on that face;
//  (c) every root keeps a single sign on the whole carrier.
struct LocalRootSystem {
  MetricSpace space;
  Polytope carrier;
  Lattice lambda;
  // Parallel to carrier.faces(); both signs of every root are stored.
  std::vector<std::vector<AffineFunctional>> face_roots;
};

// Builds the per-face assignment from root sets given at the carrier's
// vertices (parallel to Polytope::from_vertices(vertices).vertices(); the
// rows must already be distinct extreme points).  Sets may list one or both
// signs of each root.  Throws std::invalid_argument on any violation of the
// conditions above.
LocalRootSystem local_system_from_vertex_data(
    const MetricSpace& space, const QMat& vertices, const Lattice& lambda,
    const std::vector<std::vector<AffineFunctional>>& vertex_roots);

// The restriction of an ambient system to a polytope inside its fundamental
// alcove: every face receives the ambient roots vanishing on it.  Throws
// std::invalid_argument when a vertex lies outside the alcove.
LocalRootSystem restrict_to_polytope(const AffineRootSystem& rs, const QMat& vertices);

// ---------------------------------------------------------------------------
// Gluing.  Collects the face-wise simple roots (sign-normalized to be
// nonnegative on the carrier), validates them as one simple system, checks
// that the per-face scale choices agree wall by wall, builds the global
// system, and verifies that its stabilizer system at every face barycenter
// reproduces the face data.  On failure `system` is empty, `failure` names
// the first violation, and `face` points at the face concerned (when one
// is).
struct GlueResult {
  std::optional<AffineRootSystem> system;
  std::string failure;
  int face = -1;
};

GlueResult glue_local_system(const LocalRootSystem& l);

}  // namespace qham
