#include "qham/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qham/cone.hpp"
#include "qham/dynkin.hpp"
#include "qham/linalg.hpp"

namespace qham {

namespace {

constexpr size_t kFoldCap = 200000;
constexpr size_t kEnumerateCap = 100000;

// Maximal linearly independent subset of the rows, first-come order.
QMat independent_rows(const QMat& rows) {
  QMat picked;
  for (const auto& r : rows) {
    QMat trial = picked;
    trial.push_back(r);
    if (q_rank(trial) == static_cast<int>(trial.size())) picked = std::move(trial);
  }
  return picked;
}

std::vector<std::vector<int>> connected_components(const IMat& gcm) {
  const int m = static_cast<int>(gcm.size());
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < m; ++w) {
        if (!seen[w] && w != v && gcm[v][w] != 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// The point p in the row span of `basis` with <grad of fs[j], p> = rhs[j].
// The system is square once basis is a basis of the span of the gradients
// and the constraints cut a single point there.
AffinePoint solve_in_span(const MetricSpace& sp, const QMat& basis,
                          const std::vector<AffineFunctional>& fs,
                          const QVec& rhs) {
  const int k = static_cast<int>(basis.size());
  QMat m(fs.size(), QVec(k));
  for (size_t j = 0; j < fs.size(); ++j) {
    for (int i = 0; i < k; ++i) m[j][i] = sp.inner(fs[j].gradient, basis[i]);
  }
  auto t = q_solve_right(m, rhs);
  if (!t) throw std::logic_error("degenerate fundamental-domain solve");
  QVec p(sp.dim());
  for (int i = 0; i < k; ++i) p = q_add(p, q_scale((*t)[i], basis[i]));
  return p;
}

// Canonical positive-valued form of an affine type for alias comparison
// (the B2 and C2 diagrams coincide and are reported as C2).
TypeSpec canonical_type(TypeSpec t) {
  if (t.family == "B" && t.rank == 2) t.family = "C";
  return t;
}

struct RootKey {
  QVec gradient;
  Rat constant;
  bool operator<(const RootKey& o) const {
    if (gradient != o.gradient) return gradient < o.gradient;
    return constant < o.constant;
  }
};

std::vector<Constraint> box_constraints(const Box& region) {
  std::vector<Constraint> cons;
  for (size_t i = 0; i < region.lo.size(); ++i) {
    QVec row(region.lo.size());
    row[i] = Rat(1);
    cons.push_back({row, '>', region.lo[i]});
    cons.push_back({row, '<', region.hi[i]});
  }
  return cons;
}

}  // namespace

AffineRootSystem::AffineRootSystem(MetricSpace space,
                                   std::vector<AffineFunctional> simple_roots,
                                   Lattice lambda, std::vector<TypeSpec> declared)
    : space_(std::move(space)), simples_(std::move(simple_roots)),
      lambda_(std::move(lambda)) {
  const int d = space_.dim();
  if (lambda_.ambient_dim() != d) {
    throw std::invalid_argument("lattice dimension does not match the chart");
  }
  for (const auto& f : simples_) {
    if (static_cast<int>(f.gradient.size()) != d) {
      throw std::invalid_argument("root dimension does not match the chart");
    }
    if (q_is_zero(f.gradient)) {
      throw std::invalid_argument("simple root with zero gradient");
    }
  }

  // Cartan pairings: integers, nonpositive off the diagonal.  (A positively
  // proportional pair would show up here as a positive pairing.)
  IMat gcm = cartan_integers(space_, simples_);
  const int m = static_cast<int>(simples_.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && gcm[i][j] > 0) {
        throw std::invalid_argument("positive Cartan pairing between simple roots");
      }
    }
  }

  // Integrality against Lambda: gradients inside, coroots integral on it.
  for (const auto& f : simples_) {
    if (!lambda_.contains(f.gradient)) {
      throw std::invalid_argument("root gradient outside the lattice");
    }
    QVec cv = coroot(space_, f);
    for (const auto& b : lambda_.basis()) {
      if (!space_.inner(b, cv).is_integer()) {
        throw std::invalid_argument("coroot pairs non-integrally with the lattice");
      }
    }
  }

  // Split into components and classify each.
  for (const auto& members : connected_components(gcm)) {
    const int sz = static_cast<int>(members.size());
    std::vector<AffineFunctional> sub;
    QMat grads;
    for (int v : members) {
      sub.push_back(simples_[v]);
      grads.push_back(simples_[v].gradient);
    }
    const int rank = q_rank(grads);
    Component comp;
    if (rank == sz) {
      FiniteClassification fc = classify_finite(space_, sub);
      comp.spec = {fc.family, fc.rank, 1, false, Rat(1)};
      for (int k : fc.to_canonical) comp.root_indices.push_back(members[k]);
    } else if (rank == sz - 1) {
      QMat kernel = q_left_nullspace(grads);
      if (kernel.size() != 1) throw std::logic_error("kernel rank mismatch");
      IVec marks = clear_denominators(kernel[0]).first;
      Int g = 0;
      for (Int v : marks) g = gcd_ll(g, v);
      for (Int& v : marks) v /= g;
      if (marks[0] < 0) {
        for (Int& v : marks) v = -v;
      }
      Rat level(0);
      for (int k = 0; k < sz; ++k) {
        if (marks[k] <= 0) {
          throw std::invalid_argument("affine component with sign-mixed relation");
        }
        level = level + Rat(marks[k]) * simples_[members[k]].constant;
      }
      if (!level.is_positive()) {
        throw std::invalid_argument("affine component with nonpositive level");
      }
      IMat sub_gcm(sz, IVec(sz));
      for (int i = 0; i < sz; ++i) {
        for (int j = 0; j < sz; ++j) sub_gcm[i][j] = gcm[members[i]][members[j]];
      }
      AffineClassification ac = classify_affine_gcm(sub_gcm);
      comp.spec = {ac.family, ac.rank, ac.twist, true, Rat(1)};
      for (int k : ac.to_seed) {
        comp.root_indices.push_back(members[k]);
        comp.labels.push_back(marks[k]);
      }
    } else {
      throw std::invalid_argument("component gradients drop rank by more than one");
    }
    std::set<int> support;
    for (int v : members) {
      QVec cf = coordinate_form(space_, simples_[v]);
      for (int i = 0; i < d; ++i) {
        if (!cf[i].is_zero()) support.insert(i);
      }
    }
    comp.coords.assign(support.begin(), support.end());
    components_.push_back(std::move(comp));
  }

  if (!declared.empty()) {
    if (declared.size() != components_.size()) {
      throw std::invalid_argument("declared factor count does not match");
    }
    for (size_t k = 0; k < declared.size(); ++k) {
      TypeSpec want = canonical_type(declared[k]);
      const TypeSpec& got = components_[k].spec;
      if (want.family != got.family || want.rank != got.rank ||
          want.twist != got.twist || want.affine != got.affine) {
        throw std::logic_error("classified component disagrees with declared type " +
                               type_name(declared[k]));
      }
      components_[k].spec.scale = declared[k].scale;
    }
  }

  // Fundamental-domain data, one part per component in its gradient span.
  for (const auto& comp : components_) {
    std::vector<AffineFunctional> roots;
    QMat grads;
    for (int v : comp.root_indices) {
      roots.push_back(simples_[v]);
      grads.push_back(simples_[v].gradient);
    }
    QMat basis = independent_rows(grads);
    ComponentAlcove part;
    const int sz = static_cast<int>(roots.size());
    if (comp.spec.affine) {
      for (int omit = 0; omit < sz; ++omit) {
        std::vector<AffineFunctional> eqs;
        QVec rhs;
        for (int j = 0; j < sz; ++j) {
          if (j == omit) continue;
          eqs.push_back(roots[j]);
          rhs.push_back(-roots[j].constant);
        }
        part.vertices.push_back(solve_in_span(space_, basis, eqs, rhs));
      }
    } else {
      QVec rhs0(sz);
      for (int j = 0; j < sz; ++j) rhs0[j] = -roots[j].constant;
      part.vertices.push_back(solve_in_span(space_, basis, roots, rhs0));
      for (int i = 0; i < sz; ++i) {
        QVec rhs = rhs0;
        rhs[i] = rhs[i] + Rat(1);
        AffinePoint tip = solve_in_span(space_, basis, roots, rhs);
        part.rays.push_back(q_sub(tip, part.vertices[0]));
      }
    }
    alcove_.parts.push_back(std::move(part));
  }
  if (simples_.empty()) {
    alcove_.lineality = q_identity(d);
  } else {
    QMat coeffs;
    for (const auto& f : simples_) coeffs.push_back(coordinate_form(space_, f));
    alcove_.lineality = q_left_nullspace(q_transpose(coeffs));
  }
  AffinePoint ref(d);
  for (const auto& part : alcove_.parts) {
    QVec bary(d);
    for (const auto& v : part.vertices) bary = q_add(bary, v);
    bary = q_scale(Rat(1, static_cast<Int>(part.vertices.size())), bary);
    ref = q_add(ref, bary);
    for (const auto& r : part.rays) ref = q_add(ref, r);
  }
  alcove_.reference = ref;
  for (const auto& f : simples_) {
    if (!evaluate(space_, f, ref).is_positive()) {
      throw std::logic_error("reference point not interior");
    }
  }
}

bool AffineRootSystem::in_alcove(const AffinePoint& x) const {
  for (const auto& f : simples_) {
    if (evaluate(space_, f, x) < Rat(0)) return false;
  }
  return true;
}

AffineRootSystem build_from_type(const std::vector<TypeSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("at least one factor required");
  std::vector<SeedData> seeds;
  int dim = 0;
  for (const auto& t : specs) {
    seeds.push_back(seed_data(t));
    dim += seeds.back().dim;
  }
  QMat gram(dim, QVec(dim));
  std::vector<AffineFunctional> roots;
  int offset = 0;
  for (size_t f = 0; f < specs.size(); ++f) {
    const SeedData& s = seeds[f];
    for (int i = 0; i < s.dim; ++i) {
      for (int j = 0; j < s.dim; ++j) {
        gram[offset + i][offset + j] = specs[f].scale * s.gram[i][j];
      }
    }
    offset += s.dim;
  }
  MetricSpace space(gram);
  offset = 0;
  for (size_t f = 0; f < specs.size(); ++f) {
    const SeedData& s = seeds[f];
    for (size_t r = 0; r < s.coeff_rows.size(); ++r) {
      QVec coeffs(dim);
      for (int i = 0; i < s.dim; ++i) coeffs[offset + i] = s.coeff_rows[r][i];
      roots.push_back(functional_from_coordinates(space, coeffs, s.constants[r]));
    }
    offset += s.dim;
  }
  Lattice lambda = weight_lattice(space, roots);
  return AffineRootSystem(std::move(space), std::move(roots), std::move(lambda),
                          specs);
}

std::vector<AffineFunctional> enumerate_roots(const AffineRootSystem& rs,
                                              const Box& region) {
  const MetricSpace& sp = rs.space();
  const int d = rs.dim();
  if (static_cast<int>(region.lo.size()) != d ||
      static_cast<int>(region.hi.size()) != d) {
    throw std::invalid_argument("region dimension mismatch");
  }
  for (int i = 0; i < d; ++i) {
    if (region.lo[i] > region.hi[i]) {
      throw std::invalid_argument("empty region");
    }
  }
  const auto& simples = rs.simple_roots();
  if (simples.empty()) return {};

  const std::vector<Constraint> box_cons = box_constraints(region);
  const AffinePoint& base_ref = rs.alcove().reference;

  // Start from the alcove image containing the region's center.
  QVec center(d);
  for (int i = 0; i < d; ++i) center[i] = (region.lo[i] + region.hi[i]) / Rat(2);
  FoldResult fr = fold_to_alcove(rs, center);

  struct Node {
    std::vector<AffineFunctional> walls;
    AffinePoint ref;
  };
  Node start{simples, base_ref};
  for (size_t k = fr.word.size(); k-- > 0;) {
    const AffineFunctional& s = simples[fr.word[k]];
    for (auto& w : start.walls) w = reflect_functional(sp, s, w);
    start.ref = reflect_point(sp, s, start.ref);
  }

  std::set<QVec> visited;
  std::deque<Node> queue;
  visited.insert(start.ref);
  queue.push_back(std::move(start));

  std::set<RootKey> found;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();

    std::vector<Constraint> cons = box_cons;
    for (const auto& w : node.walls) {
      cons.push_back({coordinate_form(sp, w), '>', -w.constant});
    }
    if (!lp_feasible(d, cons)) continue;

    for (size_t k = 0; k < node.walls.size(); ++k) {
      const AffineFunctional& w = node.walls[k];
      std::vector<Constraint> wall_cons = box_cons;
      wall_cons.push_back({coordinate_form(sp, w), '=', -w.constant});
      if (lp_feasible(d, wall_cons)) {
        Rat v = evaluate(sp, w, base_ref);
        if (v.is_zero()) throw std::logic_error("wall through the reference point");
        AffineFunctional canon = w;
        if (!v.is_positive()) {
          canon.gradient = q_scale(Rat(-1), canon.gradient);
          canon.constant = -canon.constant;
        }
        found.insert({canon.gradient, canon.constant});
      }
      Node next;
      next.walls.reserve(node.walls.size());
      for (const auto& w2 : node.walls) {
        next.walls.push_back(reflect_functional(sp, w, w2));
      }
      next.ref = reflect_point(sp, w, node.ref);
      if (visited.insert(next.ref).second) {
        if (visited.size() > kEnumerateCap) {
          throw std::runtime_error("enumeration region too large");
        }
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<AffineFunctional> out;
  out.reserve(found.size());
  for (const auto& k : found) out.push_back({k.gradient, k.constant});
  return out;
}

FoldResult fold_to_alcove(const AffineRootSystem& rs, const AffinePoint& x) {
  const MetricSpace& sp = rs.space();
  if (static_cast<int>(x.size()) != rs.dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  FoldResult out{x, {}};
  const auto& simples = rs.simple_roots();
  while (true) {
    int neg = -1;
    for (size_t i = 0; i < simples.size(); ++i) {
      if (!evaluate(sp, simples[i], out.point).is_nonneg()) {
        neg = static_cast<int>(i);
        break;
      }
    }
    if (neg < 0) return out;
    out.point = reflect_point(sp, simples[neg], out.point);
    out.word.push_back(neg);
    if (out.word.size() > kFoldCap) {
      throw std::runtime_error("folding did not terminate");
    }
  }
}

AffinePoint apply_word(const AffineRootSystem& rs, const std::vector<int>& word,
                       const AffinePoint& y) {
  const auto& simples = rs.simple_roots();
  AffinePoint p = y;
  for (size_t k = word.size(); k-- > 0;) {
    int i = word[k];
    if (i < 0 || i >= static_cast<int>(simples.size())) {
      throw std::invalid_argument("word index out of range");
    }
    p = reflect_point(rs.space(), simples[i], p);
  }
  return p;
}

std::vector<AffineFunctional> stabilizer_roots(const AffineRootSystem& rs,
                                               const AffinePoint& x) {
  FoldResult fr = fold_to_alcove(rs, x);
  std::vector<AffineFunctional> out;
  for (const auto& f : rs.simple_roots()) {
    if (evaluate(rs.space(), f, fr.point).is_zero()) out.push_back(f);
  }
  return out;
}

Lattice weight_lattice(const MetricSpace& space,
                       const std::vector<AffineFunctional>& roots) {
  QMat coroots;
  for (const auto& f : roots) coroots.push_back(coroot(space, f));
  Lattice span = Lattice::from_generators(space.dim(), coroots);
  if (span.rank() != space.dim()) {
    throw std::domain_error("roots do not span the chart");
  }
  return dual_lattice(space, span);
}

TorusFixedGroup torus_fixed_group(const MetricSpace& space,
                                  const std::vector<AffineFunctional>& roots,
                                  const Lattice& lambda) {
  const int d = space.dim();
  if (lambda.rank() != d) {
    throw std::domain_error("lattice must be full rank");
  }
  if (roots.empty()) {
    return {AbelianGroup{0, {}}, d};
  }
  QMat grads;
  for (const auto& f : roots) grads.push_back(f.gradient);
  Lattice root_lat = Lattice::from_generators(d, grads);
  Lattice l = dual_in_span(space, root_lat);
  QMat proj = projection_onto_span(space, grads);
  Lattice pr_dual = map_lattice(dual_lattice(space, lambda), proj);
  if (!l.contains_lattice(pr_dual)) {
    throw std::domain_error("integrality violated: projected dual lattice escapes");
  }
  AbelianGroup pi0 = lattice_quotient(l, pr_dual);
  if (pi0.free_rank != 0) {
    throw std::logic_error("fixed-group component count not finite");
  }
  return {pi0, d - root_lat.rank()};
}

TorusFixedGroup torus_fixed_group(const AffineRootSystem& rs, const AffinePoint& x) {
  return torus_fixed_group(rs.space(), stabilizer_roots(rs, x), rs.lambda());
}

QMat alcove_vertices(const AffineRootSystem& rs) {
  QMat result{QVec(rs.dim())};
  for (const auto& part : rs.alcove().parts) {
    QMat next;
    for (const auto& base : result) {
      for (const auto& v : part.vertices) next.push_back(q_add(base, v));
    }
    result = std::move(next);
  }
  return result;
}

Rat character_phase(const MetricSpace& space, const AffineFunctional& chi,
                    const TorusElement& a) {
  Rat v = evaluate(space, chi, a.coords);
  return v - Rat(v.floor());
}

bool same_torus_element(const MetricSpace& space, const Lattice& lambda,
                        const TorusElement& a, const TorusElement& b) {
  return dual_lattice(space, lambda).contains(q_sub(a.coords, b.coords));
}

}  // namespace qham
