#include "qham/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qham {

namespace {

// Divides (a, b) by the absolute value of a's first nonzero entry, keeping
// the orientation; gives supporting hyperplanes one canonical scale.
void normalize_row(QVec& a, Rat& b) {
  for (const Rat& c : a) {
    if (!c.is_zero()) {
      Rat scale = c.is_positive() ? c : Rat(0) - c;
      for (Rat& e : a) e = e / scale;
      b = b / scale;
      return;
    }
  }
}

bool in_convex_hull(const QVec& v, const QMat& others) {
  if (others.empty()) return false;
  const int k = static_cast<int>(others.size());
  const int n = static_cast<int>(v.size());
  std::vector<Constraint> cons;
  for (int i = 0; i < k; ++i) {
    QVec unit(k, Rat(0));
    unit[i] = Rat(1);
    cons.push_back({unit, '>', Rat(0)});
  }
  cons.push_back({QVec(k, Rat(1)), '=', Rat(1)});
  for (int j = 0; j < n; ++j) {
    QVec row(k);
    for (int i = 0; i < k; ++i) row[i] = others[i][j];
    cons.push_back({row, '=', v[j]});
  }
  return lp_feasible(k, cons);
}

int affine_rank(const QMat& pts) {
  if (pts.size() <= 1) return 0;
  QMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(q_sub(pts[i], pts[0]));
  return q_rank(diffs);
}

}  // namespace

Polytope Polytope::from_vertices(const QMat& points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  const int n = static_cast<int>(points[0].size());
  for (const QVec& p : points) {
    if (static_cast<int>(p.size()) != n) {
      throw std::invalid_argument("polytope points have mixed dimensions");
    }
  }

  // Dedupe, then drop points inside the hull of the others.
  QMat uniq;
  for (const QVec& p : points) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  QMat verts;
  for (size_t i = 0; i < uniq.size(); ++i) {
    QMat others;
    for (size_t j = 0; j < uniq.size(); ++j) {
      if (j != i) others.push_back(uniq[j]);
    }
    if (!in_convex_hull(uniq[i], others)) verts.push_back(uniq[i]);
  }

  Polytope p;
  p.ambient_dim_ = n;
  p.verts_ = verts;
  const int k = static_cast<int>(verts.size());

  // Direction space of the affine hull.
  QMat dir;
  for (int i = 1; i < k; ++i) {
    QMat trial = dir;
    trial.push_back(q_sub(verts[i], verts[0]));
    if (q_rank(trial) > static_cast<int>(dir.size())) dir = std::move(trial);
  }
  const int d = static_cast<int>(dir.size());
  p.dim_ = d;

  // Affine-hull equalities: rows orthogonal (euclidean) to every direction.
  if (d < n) {
    QMat perp = d == 0 ? q_identity(n) : q_left_nullspace(q_transpose(dir));
    for (QVec row : perp) {
      Rat b = q_dot(row, verts[0]);
      normalize_row(row, b);
      p.hull_.push_back({row, '=', b});
    }
  }

  // Facets: supporting hyperplanes spanned by d affinely independent
  // vertices, found over all d-subsets and deduped by vertex set.
  std::set<std::vector<int>> facet_sets;
  if (d >= 1) {
    std::vector<int> subset(d);
    for (int i = 0; i < d; ++i) subset[i] = i;
    while (true) {
      // Normal direction within the hull: c = t * dir with c constant on
      // the subset; t spans the one-dimensional kernel when the subset is
      // affinely independent.
      QVec t;
      if (d == 1) {
        t = {Rat(1)};
      } else {
        QMat m;  // (d-1) x d, rows dir * (p_i - p_0)
        for (int i = 1; i < d; ++i) {
          QVec delta = q_sub(verts[subset[i]], verts[subset[0]]);
          m.push_back(q_matvec(dir, delta));
        }
        QMat kernel = q_left_nullspace(q_transpose(m));
        if (kernel.size() == 1) t = kernel[0];
      }
      if (!t.empty()) {
        QVec c = q_vecmat(t, dir);
        Rat b = q_dot(c, verts[subset[0]]);
        bool above = false, below = false;
        for (const QVec& v : verts) {
          Rat val = q_dot(c, v);
          if (val > b) above = true;
          if (val < b) below = true;
        }
        if (!(above && below)) {
          if (!above) {  // orient inward: polytope on the >= side
            for (Rat& e : c) e = Rat(0) - e;
            b = Rat(0) - b;
          }
          std::vector<int> on;
          for (int i = 0; i < k; ++i) {
            if (q_dot(c, verts[i]) == b) on.push_back(i);
          }
          if (facet_sets.insert(on).second) {
            normalize_row(c, b);
            p.facets_.push_back({c, '>', b});
            p.facet_vertices_.push_back(on);
          }
        }
      }
      // Next d-subset of {0..k-1}.
      int pos = d - 1;
      while (pos >= 0 && subset[pos] == k - d + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < d; ++i) subset[i] = subset[i - 1] + 1;
    }
  }

  // Face lattice: close the facet vertex sets under intersection, starting
  // from the whole polytope.
  std::set<std::vector<int>> seen;
  std::vector<int> top(k);
  for (int i = 0; i < k; ++i) top[i] = i;
  seen.insert(top);
  std::vector<std::vector<int>> queue = {top};
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    for (const auto& fs : p.facet_vertices_) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                            std::back_inserter(inter));
      if (!inter.empty() && seen.insert(inter).second) queue.push_back(inter);
    }
  }
  for (const auto& vs : seen) {
    QMat pts;
    for (int i : vs) pts.push_back(verts[i]);
    p.faces_.push_back({vs, affine_rank(pts)});
  }
  std::sort(p.faces_.begin(), p.faces_.end(), [](const PolyFace& a, const PolyFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return p;
}

bool Polytope::face_subset(int f, int g) const {
  const auto& a = faces_[f].vertices;
  const auto& b = faces_[g].vertices;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int Polytope::face_of(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim_) {
    throw std::invalid_argument("point dimension does not match the polytope");
  }
  for (const Constraint& c : hull_) {
    if (q_dot(c.a, x) != c.b) return -1;
  }
  std::vector<int> tight;
  for (size_t i = 0; i < facets_.size(); ++i) {
    Rat val = q_dot(facets_[i].a, x);
    if (val < facets_[i].b) return -1;
    if (val == facets_[i].b) tight.push_back(static_cast<int>(i));
  }
  if (tight.empty()) return top_face();
  std::vector<int> vs = facet_vertices_[tight[0]];
  for (size_t i = 1; i < tight.size(); ++i) {
    std::vector<int> inter;
    const auto& fs = facet_vertices_[tight[i]];
    std::set_intersection(vs.begin(), vs.end(), fs.begin(), fs.end(),
                          std::back_inserter(inter));
    vs = std::move(inter);
  }
  for (int f = 0; f < face_count(); ++f) {
    if (faces_[f].vertices == vs) return f;
  }
  return -1;  // unreachable for consistent data
}

QVec Polytope::relative_interior_point(int face) const {
  const auto& vs = faces_.at(face).vertices;
  QVec sum(ambient_dim_, Rat(0));
  for (int i : vs) sum = q_add(sum, verts_[i]);
  return q_scale(Rat(1, static_cast<Int>(vs.size())), sum);
}

}  // namespace qham
