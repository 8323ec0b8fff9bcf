#include "qham/cone.hpp"

#include <algorithm>
#include <map>

namespace qham {

namespace {

// Dense rational simplex on the standard form  min cost.y : T y = rhs, y >= 0,
// with Bland's rule (guarantees termination).  The tableau rows are
// [T | rhs]; basis[i] names the basic column of row i.
struct Tableau {
  QMat rows;               // m x (ncols + 1)
  std::vector<int> basis;  // size m
  int ncols;

  void pivot(int r, int c) {
    Rat inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost over the current feasible basis; returns false when
  // unbounded.  cost has size ncols.
  bool minimize(const QVec& cost) {
    while (true) {
      // Reduced costs r_j = cost_j - cost_B . column_j.
      int entering = -1;
      for (int j = 0; j < ncols && entering < 0; ++j) {
        Rat rj = cost[j];
        for (size_t i = 0; i < rows.size(); ++i) rj -= cost[basis[i]] * rows[i][j];
        if (rj < Rat(0)) entering = j;  // Bland: first negative index
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rat best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i][entering] > Rat(0))) continue;
        Rat ratio = rows[i].back() / rows[i][entering];
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leaving])) {
          leaving = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  QVec solution() const {
    QVec y(ncols, Rat(0));
    for (size_t i = 0; i < rows.size(); ++i) y[basis[i]] = rows[i].back();
    return y;
  }
};

}  // namespace

LpResult lp_maximize(int dim, const QVec& c, const std::vector<Constraint>& cons) {
  if (static_cast<int>(c.size()) != dim) {
    throw std::invalid_argument("lp_maximize objective dimension mismatch");
  }
  // Standard form: x = u - v with u, v >= 0, one slack per inequality.
  int nslack = 0;
  for (const auto& con : cons) {
    if (static_cast<int>(con.a.size()) != dim) {
      throw std::invalid_argument("lp_maximize constraint dimension mismatch");
    }
    if (con.rel != '=') ++nslack;
  }
  int nvars = 2 * dim + nslack;
  int m = static_cast<int>(cons.size());
  QMat rows(m, QVec(nvars + 1, Rat(0)));
  int slack = 2 * dim;
  for (int i = 0; i < m; ++i) {
    // Normalize to a.x + s = b with s >= 0: flip '>' rows.
    Rat sign = cons[i].rel == '>' ? Rat(-1) : Rat(1);
    for (int j = 0; j < dim; ++j) {
      rows[i][j] = sign * cons[i].a[j];
      rows[i][dim + j] = -sign * cons[i].a[j];
    }
    if (cons[i].rel != '=') rows[i][slack++] = Rat(1);
    rows[i][nvars] = sign * cons[i].b;
    if (rows[i][nvars] < Rat(0)) {
      for (auto& x : rows[i]) x = -x;
    }
  }

  // Phase 1: artificial variables, minimize their sum.
  Tableau t;
  t.ncols = nvars + m;
  t.rows = std::move(rows);
  for (int i = 0; i < m; ++i) {
    QVec& r = t.rows[i];
    Rat rhs = r.back();
    r.pop_back();
    r.resize(nvars + m, Rat(0));
    r[nvars + i] = Rat(1);
    r.push_back(rhs);
    t.basis.push_back(nvars + i);
  }
  QVec phase1(t.ncols, Rat(0));
  for (int i = 0; i < m; ++i) phase1[nvars + i] = Rat(1);
  t.minimize(phase1);  // bounded below by 0, can't be unbounded
  QVec y = t.solution();
  Rat infeasibility;
  for (int i = 0; i < m; ++i) infeasibility += y[nvars + i];
  if (!infeasibility.is_zero()) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive artificials out of the basis (or drop redundant rows).
  for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < nvars) continue;
    int col = -1;
    for (int j = 0; j < nvars && col < 0; ++j) {
      if (!t.rows[i][j].is_zero()) col = j;
    }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  // Phase 2: drop artificial columns, minimize -c.(u - v).
  for (auto& r : t.rows) {
    Rat rhs = r.back();
    r.resize(nvars);
    r.push_back(rhs);
  }
  t.ncols = nvars;
  QVec cost(nvars, Rat(0));
  for (int j = 0; j < dim; ++j) {
    cost[j] = -c[j];
    cost[dim + j] = c[j];
  }
  if (!t.minimize(cost)) return {LpStatus::Unbounded, Rat(0), {}};
  y = t.solution();
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.resize(dim);
  for (int j = 0; j < dim; ++j) res.x[j] = y[j] - y[dim + j];
  res.objective = q_dot(c, res.x);
  return res;
}

bool lp_feasible(int dim, const std::vector<Constraint>& cons) {
  return lp_maximize(dim, QVec(dim, Rat(0)), cons).status == LpStatus::Optimal;
}

std::optional<QVec> lp_point(int dim, const std::vector<Constraint>& cons) {
  auto res = lp_maximize(dim, QVec(dim, Rat(0)), cons);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

// ---------------------------------------------------------------------------

bool cone_contains(const QMat& generators, const QVec& x) {
  if (q_is_zero(x)) return true;
  if (generators.empty()) return false;
  // Feasibility of sum_i t_i g_i = x, t >= 0, in the t variables.
  int k = static_cast<int>(generators.size());
  int n = static_cast<int>(x.size());
  std::vector<Constraint> cons;
  for (int j = 0; j < n; ++j) {
    QVec row(k);
    for (int i = 0; i < k; ++i) row[i] = generators[i][j];
    cons.push_back({row, '=', x[j]});
  }
  for (int i = 0; i < k; ++i) {
    QVec e(k, Rat(0));
    e[i] = Rat(1);
    cons.push_back({e, '>', Rat(0)});
  }
  return lp_feasible(k, cons);
}

QMat cone_lineality(const QMat& generators) {
  QMat in_lineality;
  for (const auto& g : generators) {
    if (q_is_zero(g)) continue;
    if (cone_contains(generators, q_scale(Rat(-1), g))) in_lineality.push_back(g);
  }
  if (in_lineality.empty()) return {};
  // Reduce to an independent spanning set.
  QMat basis;
  for (const auto& g : in_lineality) {
    QMat trial = basis;
    trial.push_back(g);
    if (q_rank(trial) > q_rank(basis)) basis.push_back(g);
  }
  return basis;
}

bool cone_is_pointed(const QMat& generators) {
  return cone_lineality(generators).empty();
}

namespace {

// Hilbert basis of a pointed cone meeting Z^r, with cone generators given in
// lattice coordinates (rows, rational).
std::vector<IVec> pointed_hilbert(const QMat& gens_primitive_int) {
  int r = gens_primitive_int.empty()
              ? 0
              : static_cast<int>(gens_primitive_int[0].size());
  // Bounding box of the generator zonotope.
  QVec lo(r, Rat(0)), hi(r, Rat(0));
  for (const auto& g : gens_primitive_int) {
    for (int j = 0; j < r; ++j) {
      if (g[j] < Rat(0)) lo[j] += g[j];
      if (g[j] > Rat(0)) hi[j] += g[j];
    }
  }
  IVec ilo(r), ihi(r);
  Int cells = 1;
  for (int j = 0; j < r; ++j) {
    ilo[j] = lo[j].floor();
    ihi[j] = hi[j].ceil();
    cells = checked_mul(cells, ihi[j] - ilo[j] + 1);
    if (cells > (1 << 22)) {
      throw std::runtime_error("monoid_generators: zonotope too large");
    }
  }
  // Candidates: nonzero lattice points of the box that lie in the cone.
  std::vector<IVec> candidates;
  IVec cur = ilo;
  while (true) {
    bool zero = std::all_of(cur.begin(), cur.end(), [](Int v) { return v == 0; });
    if (!zero && cone_contains(gens_primitive_int, to_q(cur))) {
      candidates.push_back(cur);
    }
    int j = 0;
    while (j < r && cur[j] == ihi[j]) {
      cur[j] = ilo[j];
      ++j;
    }
    if (j == r) break;
    ++cur[j];
  }
  // Irreducible elements: x with no candidate y (y != x) such that x - y
  // stays in the cone; differences of box points are integral automatically.
  std::vector<IVec> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      IVec diff(r);
      for (int j = 0; j < r; ++j) diff[j] = x[j] - y[j];
      bool diff_zero = std::all_of(diff.begin(), diff.end(),
                                   [](Int v) { return v == 0; });
      if (!diff_zero && cone_contains(gens_primitive_int, to_q(diff))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

std::vector<QVec> monoid_generators(const QMat& cone_gens, const Lattice& lambda) {
  std::vector<QVec> result;
  QMat nonzero;
  for (const auto& g : cone_gens) {
    if (!q_is_zero(g)) nonzero.push_back(g);
  }
  if (nonzero.empty()) return result;

  // Work in lattice coordinates: the monoid becomes (cone' in Q^r) ∩ Z^r.
  QMat lb = lambda.basis();
  int r = lambda.rank();
  QMat gens_l;
  for (const auto& g : nonzero) {
    auto y = q_solve_left(lb, g);
    if (!y || q_vecmat(*y, lb) != g) {
      throw std::invalid_argument(
          "monoid_generators: cone generator outside the lattice span");
    }
    gens_l.push_back(*y);
  }

  QMat lin = cone_lineality(gens_l);
  QMat pointed_gens = gens_l;
  std::vector<QVec> unit_part;
  if (!lin.empty()) {
    Lattice lin_lat =
        lattice_intersect_subspace(Lattice::standard(r), lin);
    for (const auto& u : lin_lat.basis()) {
      unit_part.push_back(u);
      unit_part.push_back(q_scale(Rat(-1), u));
    }
    // Project along the lineality onto its orthogonal complement (any
    // complement works; the standard metric keeps arithmetic simple).
    MetricSpace std_space(q_identity(r));
    QMat p = projection_onto_span(std_space, lin);
    QMat complement(r, QVec(r, Rat(0)));
    for (int i = 0; i < r; ++i) {
      complement[i][i] = Rat(1);
      complement[i] = q_sub(complement[i], p[i]);
    }
    QMat proj_gens;
    for (const auto& g : pointed_gens) {
      QVec pg = q_vecmat(g, complement);
      if (!q_is_zero(pg)) proj_gens.push_back(pg);
    }
    Lattice image = map_lattice(Lattice::standard(r), complement);
    std::vector<QVec> image_hilbert = monoid_generators(proj_gens, image);
    // Lift each image generator back to an integral point; any preimage is
    // fine because the lineality lattice is already in the unit part.
    auto [pm, pd] = clear_denominators(complement);
    for (const auto& h : image_hilbert) {
      IVec target(r);
      for (int j = 0; j < r; ++j) {
        Rat scaled = h[j] * Rat(pd);
        target[j] = scaled.as_integer();  // h lies in image = proj(Z^r)
      }
      auto x = i_solve_left(pm, target);
      if (!x) throw std::logic_error("monoid_generators: lift failed");
      unit_part.push_back(to_q(*x));
    }
    std::vector<QVec> out;
    for (const auto& v : unit_part) out.push_back(q_vecmat(v, lb));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Pointed case: rescale generators to primitive integer vectors.
  QMat primitive;
  for (const auto& g : gens_l) {
    auto p = primitive_in_lattice(Lattice::standard(r), g);
    if (!p) throw std::logic_error("monoid_generators: non-rational ray");
    primitive.push_back(*p);
  }
  std::sort(primitive.begin(), primitive.end());
  primitive.erase(std::unique(primitive.begin(), primitive.end()), primitive.end());
  for (const auto& h : pointed_hilbert(primitive)) {
    result.push_back(q_vecmat(to_q(h), lb));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace qham
