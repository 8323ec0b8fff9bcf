#include "qham/twist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qham/dynkin.hpp"
#include "qham/linalg.hpp"

namespace qham {

namespace {

int root_count(const std::string& family, int rank) {
  switch (family[0]) {
    case 'A':
      return rank * (rank + 1);
    case 'B':
    case 'C':
      return 2 * rank * rank;
    case 'D':
      return 2 * rank * (rank - 1);
    case 'E':
      return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F':
      return 48;
    case 'G':
      return 12;
    default:
      throw std::logic_error("unknown family");
  }
}

std::string invariant_suffix(const std::vector<Int>& inv) {
  if (inv.empty()) return "";
  std::string s = "[";
  for (size_t i = 0; i < inv.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(inv[i]);
  }
  return s + "]";
}

// Human name of a simple compact group with the given root type and
// character-lattice invariants (the factors of lattice-in-span over root
// lattice).  Falls back to "type[invariants]" when the common names do not
// pin the group.
std::string component_name(const std::string& family, int rank,
                           const std::vector<Int>& inv) {
  long long order = 1;
  for (Int t : inv) order *= t;
  const std::string fallback =
      family + std::to_string(rank) + invariant_suffix(inv);
  switch (family[0]) {
    case 'A': {
      const long long n1 = rank + 1;
      if (order == n1) return "SU(" + std::to_string(n1) + ")";
      if (rank == 1 && order == 1) return "SO(3)";
      if (order == 1) return "PU(" + std::to_string(n1) + ")";
      if (inv.size() == 1)
        return "SU(" + std::to_string(n1) + ")/Z" + std::to_string(n1 / order);
      return fallback;
    }
    case 'B':
      if (order == 2) return "Spin(" + std::to_string(2 * rank + 1) + ")";
      if (order == 1) return "SO(" + std::to_string(2 * rank + 1) + ")";
      return fallback;
    case 'C':
      if (order == 2) return "Sp(" + std::to_string(2 * rank) + ")";
      if (order == 1) return "PSp(" + std::to_string(2 * rank) + ")";
      return fallback;
    case 'D':
      if (order == 4) return "Spin(" + std::to_string(2 * rank) + ")";
      if (order == 1) return "PSO(" + std::to_string(2 * rank) + ")";
      return fallback;
    case 'E': {
      const long long center = rank == 6 ? 3 : rank == 7 ? 2 : 1;
      if (order == center) return "E" + std::to_string(rank);
      return fallback;
    }
    case 'F':
      return order == 1 ? "F4" : fallback;
    case 'G':
      return order == 1 ? "G2" : fallback;
    default:
      return fallback;
  }
}

// Invariant factors of (lambda restricted to the span of the rows) over the
// lattice the rows generate.
std::vector<Int> span_invariants(const Lattice& lambda, const QMat& rows) {
  Lattice root_lattice = Lattice::from_generators(lambda.ambient_dim(), rows);
  Lattice in_span = lattice_intersect_subspace(lambda, rows);
  AbelianGroup q = lattice_quotient(in_span, root_lattice);
  if (q.free_rank != 0)
    throw std::logic_error("character lattice misses root directions");
  return q.torsion;
}

}  // namespace

TwistedDatum twisted_datum(const GroupSpec& g) {
  const auto& factors = g.factors;
  if (factors.empty())
    throw std::invalid_argument("at least one simple factor required");
  const int k = static_cast<int>(factors.size());
  std::vector<int> perm = g.twist.permutation;
  if (perm.empty()) {
    perm.resize(k);
    std::iota(perm.begin(), perm.end(), 0);
  }
  if (static_cast<int>(perm.size()) != k)
    throw std::invalid_argument(
        "twist permutation length does not match the factor count");
  std::vector<char> hit(k, 0);
  for (int p : perm) {
    if (p < 0 || p >= k || hit[p])
      throw std::invalid_argument("twist is not a permutation of the factors");
    hit[p] = 1;
  }
  const int r = g.twist.diagram_order;
  if (r < 1 || r > 3)
    throw std::invalid_argument("diagram automorphism order must be 1, 2, or 3");

  // Cycles of the permutation, in order of their smallest factor index.
  // Each cycle of identical factors contributes one irreducible component.
  struct Cycle {
    SimpleFactor factor;
    int length = 0;
  };
  std::vector<Cycle> cycles;
  std::vector<char> visited(k, 0);
  for (int start = 0; start < k; ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (int j = start; !visited[j]; j = perm[j]) {
      visited[j] = 1;
      ++length;
      if (!(factors[j] == factors[start]))
        throw std::invalid_argument(
            "factors permuted into each other must be identical");
    }
    cycles.push_back({factors[start], length});
  }

  std::vector<TypeSpec> specs;
  std::vector<SeedData> seeds;
  int dim = 0;
  for (const Cycle& c : cycles) {
    TypeSpec t;
    t.family = c.factor.family;
    t.rank = c.factor.rank;
    t.twist = r;
    t.affine = true;
    t.scale = Rat(c.length) * c.factor.scale;
    specs.push_back(t);
    seeds.push_back(seed_data(t));  // rejects inadmissible (type, order) pairs
    dim += seeds.back().dim;
  }

  // Assemble the chart on the fixed subspace: a cycle of length m scales the
  // invariant form by m and replaces each functional alpha by
  // a |-> alpha(m a) / m, i.e. keeps the coordinate coefficients and divides
  // the constant by m.
  QMat gram(dim, QVec(dim, Rat(0)));
  int offset = 0;
  for (size_t f = 0; f < specs.size(); ++f) {
    const SeedData& s = seeds[f];
    for (int i = 0; i < s.dim; ++i)
      for (int j = 0; j < s.dim; ++j)
        gram[offset + i][offset + j] = specs[f].scale * s.gram[i][j];
    offset += s.dim;
  }
  MetricSpace space(gram);
  std::vector<AffineFunctional> roots;
  offset = 0;
  for (size_t f = 0; f < specs.size(); ++f) {
    const SeedData& s = seeds[f];
    const Rat m(cycles[f].length);
    for (size_t row = 0; row < s.coeff_rows.size(); ++row) {
      QVec coeffs(dim, Rat(0));
      for (int i = 0; i < s.dim; ++i) coeffs[offset + i] = s.coeff_rows[row][i];
      roots.push_back(
          functional_from_coordinates(space, coeffs, s.constants[row] / m));
    }
    offset += s.dim;
  }
  Lattice lambda = weight_lattice(space, roots);
  AffineRootSystem rs(std::move(space), std::move(roots), std::move(lambda),
                      specs);
  return TwistedDatum{std::move(rs), AffinePoint(dim, Rat(0))};
}

CentralizerDatum centralizer_datum(const TwistedDatum& d,
                                   const AffinePoint& a) {
  const AffineRootSystem& rs = d.root_system;
  if (static_cast<int>(a.size()) != rs.dim())
    throw std::invalid_argument("point dimension mismatch");
  if (!rs.in_alcove(a))
    throw std::domain_error(
        "point lies outside the fundamental alcove; fold it first");
  const MetricSpace& sp = rs.space();

  CentralizerDatum out{sp,         stabilizer_roots(rs, a),
                       rs.lambda(), {},
                       {},          rs.dim(),
                       0,           0,
                       0,           ""};
  out.semisimple_rank = static_cast<int>(out.simple_roots.size());
  out.central_torus_rank = out.torus_rank - out.semisimple_rank;
  out.dimension = out.torus_rank;
  if (out.simple_roots.empty()) {
    out.label = out.central_torus_rank > 0
                    ? "T^" + std::to_string(out.central_torus_rank)
                    : "1";
    return out;
  }

  // Split the vanishing walls into components of their pairing graph.
  const int n = out.semisimple_rank;
  IMat cart = cartan_integers(sp, out.simple_roots);
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<int> members{i};
    comp_of[i] = static_cast<int>(comps.size());
    for (size_t head = 0; head < members.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        if (comp_of[j] < 0 && cart[members[head]][j] != 0) {
          comp_of[j] = comp_of[i];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  QMat all_gradients;
  std::string label;
  for (const auto& members : comps) {
    std::vector<AffineFunctional> sub;
    QMat gradients;
    for (int i : members) {
      sub.push_back(out.simple_roots[i]);
      gradients.push_back(out.simple_roots[i].gradient);
      all_gradients.push_back(out.simple_roots[i].gradient);
    }
    FiniteClassification fc = classify_finite(sp, sub);
    CentralizerComponent cc;
    cc.family = fc.family;
    cc.rank = fc.rank;
    for (int t : fc.to_canonical) cc.root_indices.push_back(members[t]);
    cc.invariants = span_invariants(out.lambda, gradients);
    out.dimension += root_count(cc.family, cc.rank);
    if (!label.empty()) label += "×";
    label += component_name(cc.family, cc.rank, cc.invariants);
    out.components.push_back(std::move(cc));
  }
  out.invariants = span_invariants(out.lambda, all_gradients);
  if (out.central_torus_rank > 0)
    label += "×T^" + std::to_string(out.central_torus_rank);
  out.label = std::move(label);
  return out;
}

TangentCone tangent_cone_chamber(const TwistedDatum& d, const AffinePoint& a) {
  const AffineRootSystem& rs = d.root_system;
  if (static_cast<int>(a.size()) != rs.dim())
    throw std::invalid_argument("point dimension mismatch");
  if (!rs.in_alcove(a))
    throw std::domain_error(
        "point lies outside the fundamental alcove; fold it first");
  const MetricSpace& sp = rs.space();

  TangentCone tc;
  QMat rows;
  for (const AffineFunctional& f : stabilizer_roots(rs, a)) {
    QVec row = coordinate_form(sp, f);
    tc.inequalities.push_back(Constraint{row, '>', Rat(0)});
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    tc.lineality = q_identity(rs.dim());
    return tc;
  }
  tc.lineality = q_left_nullspace(q_transpose(rows));
  // Dual rays inside the row span: R = (rows rows^T)^{-1} rows, so that
  // row_i . ray_j = delta_ij.
  QMat m = q_mul(rows, q_transpose(rows));
  QMat cols = q_transpose(rows);
  QMat ray_cols;
  for (const QVec& col : cols) {
    auto sol = q_solve_right(m, col);
    if (!sol) throw std::logic_error("stabilizer walls are not independent");
    ray_cols.push_back(*sol);
  }
  tc.rays = q_transpose(ray_cols);
  return tc;
}

QMat cone_generator_rows(const TangentCone& tc) {
  QMat gens = tc.rays;
  for (const QVec& l : tc.lineality) {
    gens.push_back(l);
    QVec neg(l.size());
    for (size_t i = 0; i < l.size(); ++i) neg[i] = Rat(-1) * l[i];
    gens.push_back(neg);
  }
  return gens;
}

}  // namespace qham
