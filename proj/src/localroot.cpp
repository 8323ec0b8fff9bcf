#include "qham/localroot.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qham {

namespace {

QVec encode(const AffineFunctional& f) {
  QVec key = f.gradient;
  key.push_back(f.constant);
  return key;
}

bool functional_less(const AffineFunctional& a, const AffineFunctional& b) {
  return encode(a) < encode(b);
}

std::vector<AffineFunctional> sorted_unique(std::vector<AffineFunctional> fs) {
  std::sort(fs.begin(), fs.end(), functional_less);
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

AffineFunctional scaled(const AffineFunctional& f, const Rat& c) {
  return {q_scale(c, f.gradient), c * f.constant};
}

bool is_even_integer(const Rat& v) {
  return v.is_integer() && v.num() % 2 == 0;
}

int sign_of(const Rat& v) {
  if (v.is_zero()) return 0;
  return v.is_positive() ? 1 : -1;
}

// A direction pairing nonzero with every gradient in the list; used to
// orient roots that vanish identically on a lower-dimensional carrier.
QVec generic_direction(const MetricSpace& space, const std::vector<QVec>& gradients) {
  for (Int k = 1;; ++k) {
    QVec g(space.dim());
    Rat power(1);
    for (int i = 0; i < space.dim(); ++i) {
      g[i] = power;
      power = power * Rat(k);
    }
    bool ok = true;
    for (const QVec& grad : gradients) {
      if (space.inner(grad, g).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

}  // namespace

SimpleSystemReport validate_simple_system(const MetricSpace& space,
                                          const std::vector<AffineFunctional>& walls) {
  SimpleSystemReport report;
  for (const AffineFunctional& f : walls) {
    if (q_is_zero(f.gradient)) {
      throw std::invalid_argument("simple-system test requires nonzero gradients");
    }
  }
  const int m = static_cast<int>(walls.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Rat ip = space.inner(walls[i].gradient, walls[j].gradient);
      Rat measure = Rat(4) * ip * ip /
                    (space.norm2(walls[i].gradient) * space.norm2(walls[j].gradient));
      auto reject = [&](const std::string& why) {
        report.first = i;
        report.second = j;
        report.angle_measure = measure;
        report.reason = why;
      };
      if (ip.is_positive()) {
        reject("pair closes an acute angle");
        return report;
      }
      if (measure != Rat(0) && measure != Rat(1) && measure != Rat(2) &&
          measure != Rat(3) && measure != Rat(4)) {
        reject("pair angle is not crystallographic");
        return report;
      }
      // measure == 4 with nonpositive inner product is the antiparallel
      // case (angle pi, order-infinity product): allowed.
    }
  }
  // Strict positivity: maximize t subject to f_i(x) >= t, t <= 1.
  const int d = space.dim();
  std::vector<Constraint> cons;
  for (const AffineFunctional& f : walls) {
    QVec row = coordinate_form(space, f);
    row.push_back(Rat(-1));
    cons.push_back({row, '>', Rat(0) - f.constant});
  }
  QVec t_row(d + 1, Rat(0));
  t_row[d] = Rat(1);
  cons.push_back({t_row, '<', Rat(1)});
  LpResult lp = lp_maximize(d + 1, t_row, cons);
  if (lp.status != LpStatus::Optimal || !lp.objective.is_positive()) {
    report.reason = "no point is strictly positive on every wall";
    return report;
  }
  report.accepted = true;
  for (const AffineFunctional& f : walls) {
    report.alcove.push_back({coordinate_form(space, f), '>', Rat(0) - f.constant});
  }
  return report;
}

std::vector<int> ambiguous_reflections(const MetricSpace& space,
                                       const std::vector<AffineFunctional>& walls,
                                       const Lattice& lambda) {
  std::vector<int> out;
  for (size_t s = 0; s < walls.size(); ++s) {
    const QVec& g = walls[s].gradient;
    if (q_is_zero(g)) {
      throw std::invalid_argument("wall gradient must be nonzero");
    }
    auto prim = primitive_in_lattice(lambda, g);
    if (!prim || *prim != g) {
      throw std::invalid_argument("wall gradient is not primitive in the lattice");
    }
    QVec cr = coroot(space, walls[s]);
    bool all_even = true;
    for (const QVec& basis_row : lambda.basis()) {
      if (!is_even_integer(space.inner(basis_row, cr))) {
        all_even = false;
        break;
      }
    }
    if (all_even) out.push_back(static_cast<int>(s));
  }
  return out;
}

AffineRootSystem root_system_from_walls(const MetricSpace& space,
                                        const std::vector<AffineFunctional>& walls,
                                        const Lattice& lambda,
                                        const std::vector<int>& doubled) {
  std::vector<int> amb = ambiguous_reflections(space, walls, lambda);
  std::set<int> amb_set(amb.begin(), amb.end());
  std::set<int> chosen;
  for (int s : doubled) {
    if (s < 0 || s >= static_cast<int>(walls.size()) || !chosen.insert(s).second) {
      throw std::invalid_argument("doubled indices must be distinct wall indices");
    }
    if (!amb_set.count(s)) {
      throw std::invalid_argument("wall " + std::to_string(s) +
                                  " admits only the primitive scale");
    }
  }
  std::vector<AffineFunctional> simples = walls;
  for (int s : chosen) simples[s] = scaled(simples[s], Rat(2));
  return AffineRootSystem(space, std::move(simples), lambda);
}

std::vector<int> doubled_simple_roots(const AffineRootSystem& rs) {
  std::vector<int> out;
  const auto& simples = rs.simple_roots();
  for (size_t s = 0; s < simples.size(); ++s) {
    auto prim = primitive_in_lattice(rs.lambda(), simples[s].gradient);
    if (prim && simples[s].gradient == q_scale(Rat(2), *prim)) {
      out.push_back(static_cast<int>(s));
    }
  }
  return out;
}

std::vector<AffineFunctional> reflection_closure(
    const MetricSpace& space, const std::vector<AffineFunctional>& seed) {
  std::set<QVec> keys;
  std::vector<AffineFunctional> roots;
  auto insert = [&](const AffineFunctional& f) {
    if (keys.insert(encode(f)).second) {
      roots.push_back(f);
      return true;
    }
    return false;
  };
  for (const AffineFunctional& f : seed) {
    insert(f);
    insert(scaled(f, Rat(-1)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = roots.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (insert(reflect_functional(space, roots[i], roots[j]))) {
          grew = true;
          if (roots.size() > 2000) {
            throw std::logic_error(
                "reflection closure does not terminate (infinite system?)");
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), functional_less);
  return roots;
}

LocalRootSystem local_system_from_vertex_data(
    const MetricSpace& space, const QMat& vertices, const Lattice& lambda,
    const std::vector<std::vector<AffineFunctional>>& vertex_roots) {
  Polytope carrier = Polytope::from_vertices(vertices);
  if (carrier.vertices() != vertices) {
    throw std::invalid_argument("vertex rows must be distinct extreme points");
  }
  if (vertex_roots.size() != vertices.size()) {
    throw std::invalid_argument("one root set per vertex is required");
  }
  if (space.dim() != carrier.ambient_dim() || lambda.ambient_dim() != space.dim()) {
    throw std::invalid_argument("chart, lattice, and carrier dimensions disagree");
  }

  // Close each vertex set under negation and validate it as an integral
  // root system vanishing at its vertex.
  std::vector<std::vector<AffineFunctional>> full(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) {
    std::vector<AffineFunctional> set = vertex_roots[v];
    for (const AffineFunctional& f : vertex_roots[v]) set.push_back(scaled(f, Rat(-1)));
    set = sorted_unique(set);
    std::set<QVec> keys;
    for (const AffineFunctional& f : set) keys.insert(encode(f));
    for (const AffineFunctional& f : set) {
      if (q_is_zero(f.gradient)) {
        throw std::invalid_argument("vertex root with zero gradient");
      }
      if (!evaluate(space, f, vertices[v]).is_zero()) {
        throw std::invalid_argument("vertex root does not vanish at its vertex");
      }
      if (!lambda.contains(f.gradient)) {
        throw std::invalid_argument("vertex root lies outside the lattice");
      }
      QVec cr = coroot(space, f);
      for (const QVec& basis_row : lambda.basis()) {
        if (!space.inner(basis_row, cr).is_integer()) {
          throw std::invalid_argument("vertex root coroot is not integral on the lattice");
        }
      }
      bool pos = false, neg = false;
      for (const QVec& w : carrier.vertices()) {
        int s = sign_of(evaluate(space, f, w));
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) {
        throw std::invalid_argument("vertex root changes sign on the carrier");
      }
    }
    for (const AffineFunctional& a : set) {
      for (const AffineFunctional& b : set) {
        Rat pairing = space.inner(b.gradient, coroot(space, a));
        if (!pairing.is_integer()) {
          throw std::invalid_argument("vertex roots pair non-integrally");
        }
        if (!keys.count(encode(reflect_functional(space, a, b)))) {
          throw std::invalid_argument("vertex root set is not reflection-closed");
        }
        // Reduced: proportional roots only as +/- pairs.
        if (!(a == b)) {
          QMat pair_rows = {a.gradient, b.gradient};
          if (q_rank(pair_rows) == 1 && !(a == scaled(b, Rat(-1)))) {
            throw std::invalid_argument("vertex root set is not reduced");
          }
        }
      }
    }
    full[v] = std::move(set);
  }

  // Derive every face's system from its vertices and check they agree.
  LocalRootSystem out{space, std::move(carrier), lambda, {}};
  const auto& faces = out.carrier.faces();
  out.face_roots.resize(faces.size());
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    bool first = true;
    for (int v : faces[fi].vertices) {
      std::vector<AffineFunctional> cand;
      for (const AffineFunctional& f : full[v]) {
        bool vanishes = true;
        for (int u : faces[fi].vertices) {
          if (!evaluate(space, f, out.carrier.vertices()[u]).is_zero()) {
            vanishes = false;
            break;
          }
        }
        if (vanishes) cand.push_back(f);
      }
      if (first) {
        out.face_roots[fi] = std::move(cand);
        first = false;
      } else if (out.face_roots[fi] != cand) {
        throw std::invalid_argument("vertex data disagree on face " + std::to_string(fi));
      }
    }
  }
  return out;
}

LocalRootSystem restrict_to_polytope(const AffineRootSystem& rs, const QMat& vertices) {
  std::vector<std::vector<AffineFunctional>> data;
  for (const QVec& v : vertices) {
    if (!rs.in_alcove(v)) {
      throw std::invalid_argument("polytope vertex outside the fundamental alcove");
    }
    data.push_back(reflection_closure(rs.space(), stabilizer_roots(rs, v)));
  }
  return local_system_from_vertex_data(rs.space(), vertices, rs.lambda(), data);
}

GlueResult glue_local_system(const LocalRootSystem& l) {
  GlueResult result;
  const MetricSpace& space = l.space;
  const QVec ref = l.carrier.relative_interior_point(l.carrier.top_face());

  std::vector<QVec> all_gradients;
  for (const auto& fs : l.face_roots) {
    for (const AffineFunctional& f : fs) all_gradients.push_back(f.gradient);
  }
  const QVec generic = generic_direction(space, all_gradients);
  // Sign on the carrier; roots vanishing identically on it are oriented by
  // a fixed generic direction so that opposite pairs still split.
  auto orientation = [&](const AffineFunctional& f) {
    int s = sign_of(evaluate(space, f, ref));
    if (s != 0) return s;
    return sign_of(space.inner(f.gradient, generic));
  };

  // Face-wise simple roots of the positive halves, pooled over all faces.
  std::vector<AffineFunctional> pool;
  for (const auto& fs : l.face_roots) {
    std::vector<AffineFunctional> positives;
    std::set<QVec> pos_keys;
    for (const AffineFunctional& f : fs) {
      if (orientation(f) > 0) {
        positives.push_back(f);
        pos_keys.insert(encode(f));
      }
    }
    for (const AffineFunctional& f : positives) {
      bool decomposable = false;
      for (const AffineFunctional& g : positives) {
        AffineFunctional rest{q_sub(f.gradient, g.gradient), f.constant - g.constant};
        if (!q_is_zero(rest.gradient) && pos_keys.count(encode(rest))) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) pool.push_back(f);
    }
  }
  std::vector<AffineFunctional> simples = sorted_unique(std::move(pool));

  // Wall-by-wall scale consistency: a wall may appear once, primitive or
  // doubled, never both.
  std::map<QVec, Rat> wall_scale;
  for (const AffineFunctional& f : simples) {
    auto prim = primitive_in_lattice(l.lambda, f.gradient);
    Rat scale;
    if (prim && f.gradient == *prim) {
      scale = Rat(1);
    } else if (prim && f.gradient == q_scale(Rat(2), *prim)) {
      scale = Rat(2);
    } else {
      result.failure = "simple root is neither primitive nor twice primitive in the lattice";
      return result;
    }
    AffineFunctional wall = scaled(f, Rat(1) / scale);
    auto [it, fresh] = wall_scale.emplace(encode(wall), scale);
    if (!fresh && it->second != scale) {
      result.failure = "faces disagree on the scale of a shared wall";
      return result;
    }
  }

  SimpleSystemReport check = validate_simple_system(space, simples);
  if (!check.accepted) {
    result.failure = "simple-system test failed: " + check.reason;
    return result;
  }

  std::optional<AffineRootSystem> rs;
  try {
    rs.emplace(space, simples, l.lambda);
  } catch (const std::exception& e) {
    result.failure = std::string("glued system is not integral: ") + e.what();
    return result;
  }

  // The carrier lies in the glued alcove by sign normalization, so the
  // stabilizer system at each face barycenter must reproduce the face data.
  for (int fi = 0; fi < l.carrier.face_count(); ++fi) {
    QVec x = l.carrier.relative_interior_point(fi);
    std::vector<AffineFunctional> glued_face =
        reflection_closure(space, stabilizer_roots(*rs, x));
    std::vector<AffineFunctional> expected = sorted_unique(l.face_roots[fi]);
    if (glued_face != expected) {
      result.failure = "glued system disagrees with the data on a face";
      result.face = fi;
      return result;
    }
  }
  result.system = std::move(rs);
  return result;
}

}  // namespace qham
