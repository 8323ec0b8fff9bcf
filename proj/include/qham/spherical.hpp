#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qham/catalog.hpp"
#include "qham/polytope.hpp"
#include "qham/twist.hpp"

namespace qham {

// Momentum pairs (P, Lambda): a rational polytope inside the fundamental
// alcove of a twisted group datum together with a lattice of translations,
// and the vertex-wise sphericity check: the pair is spherical exactly when
// at every vertex the monoid (tangent cone of P) ∩ Lambda is the weight
// monoid of a smooth affine spherical variety of the vertex centralizer.
// The oracle for the latter is the local-model catalog plus a built-in
// complete classification for centralizers of semisimple rank <= 1, so the
// check answers Spherical / NotSpherical / Unknown, never incorrectly.

class MomentumPair {
 public:
  // vertices: rational points (rows) in the chart of the group's twisted
  // datum; lambda: lattice in the same chart.  Throws std::invalid_argument
  // when the vertex list is empty, a vertex lies outside the fundamental
  // alcove, or dimensions disagree.  The condition that Lambda lies in the
  // direction space of P is not enforced here: it is a consequence of
  // sphericity and its failure must surface as a NotSpherical verdict.
  MomentumPair(GroupSpec group, QMat vertices, Lattice lambda);

  const GroupSpec& group() const { return group_; }
  const TwistedDatum& datum() const { return datum_; }
  const Polytope& polytope() const { return polytope_; }
  const Lattice& lambda() const { return lambda_; }
  int rank() const { return lambda_.rank(); }

 private:
  GroupSpec group_;
  TwistedDatum datum_;
  Polytope polytope_;
  Lattice lambda_;
};

// Tangent cone C_a(P) = R>=0 (P - a), valid at every point a of P: rows of
// `generators` are vertex - a; `inequalities` is the irredundant description
// (facets of P active at a as '>' rows, the affine hull of P as '=' rows,
// both homogenized).  Throws std::invalid_argument when a is outside P.
struct PolytopeCone {
  QMat generators;
  std::vector<Constraint> inequalities;
};

PolytopeCone tangent_cone(const MomentumPair& pair, const AffinePoint& a);

// Hilbert basis of cone ∩ lambda.  Generators outside the rational span of
// lambda are legal: the cone is first intersected with that span (the
// intersection can be strictly smaller than the cone, down to {0}), and the
// monoid is generated inside it.  Non-pointed cones yield both signs of a
// basis of their lineality lattice.
std::vector<QVec> weight_monoid(const QMat& cone_generators, const Lattice& lambda);
std::vector<QVec> weight_monoid(const PolytopeCone& cone, const Lattice& lambda);

enum class Sphericity { Spherical, NotSpherical, Unknown };
std::string to_string(Sphericity s);

// Result of the local check at one vertex.  `adapted_basis` holds the
// pairings of each Hilbert basis element with the coroots of the vanishing
// walls (components canonically sorted, nodes in canonical order), and
// `central_parts` the metric-orthogonal projections away from the wall span;
// together they normalize the monoid for catalog comparison and reporting.
struct VertexCheck {
  CentralizerDatum centralizer;
  int vertex = -1;
  Sphericity status = Sphericity::Unknown;
  std::string model = {};   // local model name when Spherical
  std::string reason = {};  // explanation otherwise
  PolytopeCone cone = {};
  QMat hilbert_basis = {};  // chart coordinates, sorted
  IMat adapted_basis = {};
  QMat central_parts = {};
  // Spherical roots of the matched model, transported to chart functionals;
  // present only when the matched catalog entry records them.
  std::vector<AffineFunctional> spherical_roots = {};
  bool has_spherical_roots = false;
};

VertexCheck check_spherical_at(const MomentumPair& pair, const AffinePoint& a,
                               const LocalModelCatalog& catalog);

// Aggregate over all vertices: Spherical when every vertex is, NotSpherical
// when some vertex is (deciding_vertex = the lowest such index), otherwise
// Unknown (deciding_vertex = the lowest Unknown index).
struct PairVerdict {
  Sphericity status = Sphericity::Unknown;
  int deciding_vertex = -1;
  std::vector<VertexCheck> vertices;
};

PairVerdict check_pair(const MomentumPair& pair, const LocalModelCatalog& catalog);

// Full positive certificate.  manifold_dimension is
//   dim K - dim L + 2 rank(Lambda)
// with L the centralizer of a relative-interior point of P.  The band root
// system is glued from the transported spherical roots when every vertex
// model carries them; `band_failure` reports a gluing obstruction (empty
// band and empty failure mean the catalog data was absent).  Throws
// std::invalid_argument when the pair is not Spherical.
struct Certificate {
  PairVerdict verdict;
  int rank = 0;
  int group_dimension = 0;
  int interior_centralizer_dimension = 0;
  int manifold_dimension = 0;
  std::string interior_centralizer_label = {};
  std::optional<AffineRootSystem> band = {};
  std::string band_failure = {};
};

Certificate certificate(const MomentumPair& pair, const LocalModelCatalog& catalog);

// Dimension of the compact group of a spec: the sum of dim(family, rank)
// over all factors (n(n+2) for A_n, n(2n+1) for B_n/C_n, n(2n-1) for D_n,
// 14/52/78/133/248 for G/F/E types).
int group_dimension(const GroupSpec& g);

}  // namespace qham
