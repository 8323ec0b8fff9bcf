#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qham/rational.hpp"

namespace qham {

// Row-major matrices.  Lattices and linear systems in this project are
// routinely rank-deficient, so the integer routines all report ranks and
// return transforms rather than assuming regularity.

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// ---------------------------------------------------------------------------
// Construction / conversion helpers

IMat i_identity(int n);
QMat q_identity(int n);
QMat to_q(const IMat& a);
QVec to_q(const IVec& v);

// Writes a = m / d with m integral and d > 0 minimal.
std::pair<IMat, Int> clear_denominators(const QMat& a);
std::pair<IVec, Int> clear_denominators(const QVec& v);

IMat i_transpose(const IMat& a);
QMat q_transpose(const QMat& a);
IMat i_mul(const IMat& a, const IMat& b);
QMat q_mul(const QMat& a, const QMat& b);
QVec q_matvec(const QMat& a, const QVec& x);   // a * x
QVec q_vecmat(const QVec& x, const QMat& a);   // x * a
IVec i_vecmat(const IVec& x, const IMat& a);
Rat q_dot(const QVec& a, const QVec& b);
QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
QVec q_scale(const Rat& c, const QVec& v);
QMat q_scale_mat(const Rat& c, const QMat& a);
bool q_is_zero(const QVec& v);

// ---------------------------------------------------------------------------
// Rational elimination

int q_rank(QMat a);
Rat q_det(QMat a);
QMat q_inverse(QMat a);  // throws std::domain_error if singular

// Solve x * a = b (row convention).  Returns nullopt if inconsistent.
std::optional<QVec> q_solve_left(const QMat& a, const QVec& b);
// Solve a * x = b.
std::optional<QVec> q_solve_right(const QMat& a, const QVec& b);

// Basis (as rows) of {x : x * a = 0}.
QMat q_left_nullspace(const QMat& a);

// ---------------------------------------------------------------------------
// Hermite normal form (row style)
//
// h is the canonical echelon form of the row span: pivot columns increase,
// pivots are positive, entries above a pivot are reduced into [0, pivot).
// u is unimodular with (u * a) = h extended by zero rows, so rows r.. of u
// form a basis of the left kernel of a.

struct HnfResult {
  IMat h;    // rank x ncols
  IMat u;    // nrows x nrows, unimodular
  int rank = 0;
};

HnfResult hnf_rows(const IMat& a);

// Canonical basis of the row span (HNF rows only).
IMat row_lattice_hnf(const IMat& a);

// Basis rows of {x in Z^k : x * a = 0}; the basis is itself in HNF.
IMat left_kernel(const IMat& a);

// Lattice {x in Z^k : x * a  lies in the integer row span of rels},
// returned as HNF basis rows.  rels may be empty (kernel case); rels rows
// must have the same length as rows of a.
IMat preimage_lattice(const IMat& a, const IMat& rels);

// Integer solution of x * h = b for h in row HNF form (as produced above).
std::optional<IVec> solve_in_hnf_basis(const IMat& h, const IVec& b);

// Integer solution of x * a = b for arbitrary a.
std::optional<IVec> i_solve_left(const IMat& a, const IVec& b);

// ---------------------------------------------------------------------------
// Smith normal form

struct SnfResult {
  std::vector<Int> diag;  // positive invariant factors, d[i] | d[i+1]
  IMat u;                 // nrows x nrows unimodular
  IMat v;                 // ncols x ncols unimodular; u * a * v = diag(d)
  int rank = 0;
};

SnfResult smith_normal_form(const IMat& a);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups (invariant-factor form)

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // factors > 1, each dividing the next

  bool operator==(const AbelianGroup&) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  Int torsion_order() const;
  std::string str() const;  // "0", "Z", "Z^2 + Z/2 + Z/6", ...
};

// The quotient Z^n / (integer row span of rels).
AbelianGroup quotient_group(int n, const IMat& rels);

}  // namespace qham
