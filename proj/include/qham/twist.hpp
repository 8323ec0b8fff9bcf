#pragma once

#include <string>
#include <vector>

#include "qham/cone.hpp"
#include "qham/rootsys.hpp"

namespace qham {

// Twisted conjugation data for a compact connected group given as a product
// of simply connected simple factors together with an automorphism.  The
// automorphism is a permutation of identical factors composed with a diagram
// automorphism; its orbit space is encoded by an affine root system on the
// fixed subspace of the maximal torus, and this module derives that system,
// the centralizer data of alcove points, and the chamber decomposition of
// tangent directions.

struct SimpleFactor {
  std::string family = "A";
  int rank = 1;
  Rat scale = Rat(1);  // scaling of the invariant form on this factor

  bool operator==(const SimpleFactor&) const = default;
};

struct TwistSpec {
  // Permutation of the factor list; empty means the identity.
  std::vector<int> permutation;
  // Order of the diagram automorphism applied once around each cycle of the
  // permutation (1, 2, or 3; the same order applies to every cycle).
  int diagram_order = 1;

  bool operator==(const TwistSpec&) const = default;
};

struct GroupSpec {
  std::vector<SimpleFactor> factors;
  TwistSpec twist;
};

// The affine root system of twisted conjugation on the fixed subspace of the
// maximal torus.  Each cycle of length m over a factor of type X_n with
// diagram order r contributes one irreducible component of type X_n^(r),
// with every functional alpha replaced by a |-> alpha(m a) / m (identical
// coordinate coefficients, constants divided by m) and the invariant form
// multiplied by m.  The lattice of the system is the projected character
// lattice of the maximal torus, which equals the dual of the span of the
// gradient coroots.  These charts place a distinguished alcove vertex at the
// origin; `translation` records that base point.
struct TwistedDatum {
  AffineRootSystem root_system;
  AffinePoint translation;

  const Lattice& lambda() const { return root_system.lambda(); }
  const Alcove& alcove() const { return root_system.alcove(); }
};

// Throws std::invalid_argument when the factors are empty, the permutation
// is not a permutation, a cycle mixes distinct factors, or the diagram order
// is not admissible for a cycle's factor type.
TwistedDatum twisted_datum(const GroupSpec& g);

// One irreducible piece of a centralizer root system: its classified type,
// the indices of its simple roots inside CentralizerDatum::simple_roots (in
// canonical node order), and the invariant factors of the character lattice
// restricted to its span modulo its root lattice.
struct CentralizerComponent {
  std::string family = "A";
  int rank = 0;
  std::vector<int> root_indices;
  std::vector<Int> invariants;
};

// Root datum of the stabilizer of an alcove point under twisted conjugation:
// the walls through the point form a simple system for its root system, the
// maximal torus is the full fixed torus, and the isomorphism type is pinned
// by the classified components together with the lattice invariants.
struct CentralizerDatum {
  MetricSpace space;
  std::vector<AffineFunctional> simple_roots;  // walls vanishing at the point
  Lattice lambda;
  std::vector<CentralizerComponent> components;
  std::vector<Int> invariants;  // lattice-in-span over full root lattice
  int torus_rank = 0;           // rank of the maximal torus (= chart dim)
  int semisimple_rank = 0;      // number of vanishing walls
  int central_torus_rank = 0;   // torus_rank - semisimple_rank
  int dimension = 0;            // torus_rank + number of roots
  std::string label;            // e.g. "Sp(4)×Sp(4)", "SU(2)×T^1", "T^2"
};

// Requires the point to lie in the fundamental alcove (fold first); throws
// std::domain_error otherwise.
CentralizerDatum centralizer_datum(const TwistedDatum& d, const AffinePoint& a);

// The cone of directions from an alcove point into the alcove: the chamber
// cut out by the walls through the point.  `inequalities` lists those walls
// as coordinate rows (row . v >= 0); `rays` holds the dual generators inside
// the span of the rows; `lineality` spans the directions on which every wall
// vanishes.  The cone is the set of nonnegative combinations of the rays
// plus arbitrary lineality contributions.
struct TangentCone {
  std::vector<Constraint> inequalities;
  QMat rays;
  QMat lineality;
};

TangentCone tangent_cone_chamber(const TwistedDatum& d, const AffinePoint& a);

// Generator rows for the cone functions: the rays plus both signs of the
// lineality basis.
QMat cone_generator_rows(const TangentCone& tc);

}  // namespace qham
