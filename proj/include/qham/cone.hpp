#pragma once

#include <vector>

#include "qham/euclid.hpp"

namespace qham {

// Exact linear programming and polyhedral-cone helpers.  Problems here are
// tiny (dimension <= ~10, a few dozen constraints), so the implementation
// favours exactness and simplicity: dense rational two-phase simplex with
// Bland's rule.

struct Constraint {
  QVec a;
  char rel;  // '<' (a.x <= b), '>' (a.x >= b), '=' (a.x == b)
  Rat b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  QVec x;  // an optimal (or feasible) point when status == Optimal
};

// Maximizes c.x over free variables x subject to the constraints.
LpResult lp_maximize(int dim, const QVec& c, const std::vector<Constraint>& cons);

bool lp_feasible(int dim, const std::vector<Constraint>& cons);

// Some point of the constraint set, if nonempty.
std::optional<QVec> lp_point(int dim, const std::vector<Constraint>& cons);

// ---------------------------------------------------------------------------
// Cones given by generators (rows): C = { sum_i t_i g_i : t_i >= 0 }.

bool cone_contains(const QMat& generators, const QVec& x);

// Basis rows of the lineality space C ∩ -C.
QMat cone_lineality(const QMat& generators);

bool cone_is_pointed(const QMat& generators);

// Minimal generating set of the monoid C ∩ Λ (a Hilbert basis when C is
// pointed; for non-pointed cones the unit part contributes +/- a basis of
// the lineality sublattice and the rest is lifted from the pointed image).
// Requires all generators to lie in the rational span of Λ.
std::vector<QVec> monoid_generators(const QMat& cone_gens, const Lattice& lambda);

}  // namespace qham
