#include "qham/band.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qham {

namespace {

Int mod_positive(Int a, Int d) {
  Int r = a % d;
  return r < 0 ? r + d : r;
}

// Rows spanning the metric-orthogonal complement of the given gradient rows.
QMat orthogonal_rows(const MetricSpace& space, const QMat& gradient_rows) {
  if (gradient_rows.empty()) {
    return q_identity(space.dim());
  }
  QMat forms;
  for (const QVec& g : gradient_rows) {
    forms.push_back(q_vecmat(g, space.gram()));
  }
  return q_left_nullspace(q_transpose(forms));
}

QMat gradient_rows_of(const AffineRootSystem& rs) {
  QMat rows;
  for (const AffineFunctional& f : rs.simple_roots()) {
    rows.push_back(f.gradient);
  }
  return rows;
}

Lattice invariant_part(const AffineRootSystem& rs, const Lattice& lambda) {
  QMat perp = orthogonal_rows(rs.space(), gradient_rows_of(rs));
  if (perp.empty()) {
    return Lattice::zero(rs.dim());
  }
  return lattice_intersect_subspace(lambda, perp);
}

// Indices of the infinite diagram components.
std::vector<int> infinite_components(const AffineRootSystem& rs) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(rs.components().size()); ++c) {
    if (rs.components()[c].spec.affine) {
      out.push_back(c);
    }
  }
  return out;
}

// Cyclic stalk orders at x, one per infinite component (in
// infinite_components order), for an adjoint lattice.
std::vector<Int> stalk_orders(const AffineRootSystem& rs, const AffinePoint& x) {
  std::vector<std::vector<int>> vs = vanishing_sets(rs, x);
  std::vector<Int> out;
  for (int c : infinite_components(rs)) {
    out.push_back(complement_label_gcd(rs.components()[c].labels, vs[c]));
  }
  return out;
}

StalkPresentation cyclic_presentation(const std::vector<Int>& orders) {
  StalkPresentation s;
  s.generators = static_cast<int>(orders.size());
  for (int i = 0; i < s.generators; ++i) {
    IVec row(s.generators, 0);
    row[i] = orders[i];
    s.relations.push_back(row);
  }
  return s;
}

// a (ra x k) times b (k x out_cols), with explicit output width so empty
// shapes stay unambiguous.
IMat compose_maps(const IMat& a, const IMat& b, int out_cols) {
  IMat r(a.size(), IVec(out_cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t t = 0; t < a[i].size(); ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < out_cols; ++j) {
        r[i][j] = checked_add(r[i][j], checked_mul(a[i][t], b[t][j]));
      }
    }
  }
  return r;
}

Lattice relation_lattice(const StalkPresentation& s) {
  return Lattice::from_generators(s.generators, to_q(s.relations));
}

void check_vertices_in_alcove(const AffineRootSystem& rs, const QMat& vertices) {
  for (const QVec& v : vertices) {
    if (!rs.in_alcove(v)) {
      throw std::invalid_argument("polytope vertex outside the fundamental alcove");
    }
  }
}

// Stalk orders per face of the polytope, one row per face.
std::vector<std::vector<Int>> face_orders(const AffineRootSystem& rs,
                                          const Polytope& p) {
  std::vector<std::vector<Int>> out;
  for (int f = 0; f < p.face_count(); ++f) {
    out.push_back(stalk_orders(rs, p.relative_interior_point(f)));
  }
  return out;
}

ConstructibleSheaf assemble_component_sheaf(
    Polytope p, const std::vector<std::vector<Int>>& orders,
    const std::vector<std::vector<std::vector<Int>>>& maps) {
  ConstructibleSheaf s(std::move(p));
  const int nf = s.complex.face_count();
  for (int f = 0; f < nf; ++f) {
    s.stalks.push_back(cyclic_presentation(orders[f]));
  }
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f == g || !s.complex.face_subset(f, g)) continue;
      const int k = static_cast<int>(orders[f].size());
      IMat m(k, IVec(k, 0));
      for (int i = 0; i < k; ++i) {
        m[i][i] = maps[f][g][i];
      }
      s.restrictions[{f, g}] = std::move(m);
    }
  }
  validate_sheaf(s);
  return s;
}

}  // namespace

Int complement_label_gcd(const IVec& labels, const std::vector<int>& vanishing) {
  const int n = static_cast<int>(labels.size());
  std::vector<char> listed(n, 0);
  for (int j : vanishing) {
    if (j < 0 || j >= n) {
      throw std::invalid_argument("vanishing index out of range");
    }
    if (listed[j]) {
      throw std::invalid_argument("vanishing index repeated");
    }
    listed[j] = 1;
  }
  Int g = 0;
  int complement = 0;
  for (int j = 0; j < n; ++j) {
    if (!listed[j]) {
      g = gcd_ll(g, labels[j]);
      ++complement;
    }
  }
  if (complement == 0) {
    throw std::invalid_argument(
        "every simple root of the component is listed as vanishing");
  }
  return g;
}

Int stalk_class(const IVec& labels, const std::vector<int>& vanishing,
                const IVec& coords) {
  if (coords.size() != vanishing.size()) {
    throw std::invalid_argument(
        "coordinate tuple does not match the vanishing set");
  }
  const Int d = complement_label_gcd(labels, vanishing);
  Int s = 0;
  for (std::size_t k = 0; k < vanishing.size(); ++k) {
    const Int term =
        checked_mul(mod_positive(labels[vanishing[k]], d), mod_positive(coords[k], d));
    s = mod_positive(checked_add(s, term), d);
  }
  return s;
}

bool is_adjoint_lattice(const AffineRootSystem& rs, const Lattice& lambda) {
  const Lattice gradients =
      Lattice::from_generators(rs.dim(), gradient_rows_of(rs));
  return lattice_sum(gradients, invariant_part(rs, lambda)) == lambda;
}

Lattice adjoint_normalization(const AffineRootSystem& rs, const Lattice& lambda) {
  const Lattice gradients =
      Lattice::from_generators(rs.dim(), gradient_rows_of(rs));
  return lattice_sum(gradients, invariant_part(rs, lambda));
}

std::vector<std::vector<int>> vanishing_sets(const AffineRootSystem& rs,
                                             const AffinePoint& x) {
  const AffinePoint p = fold_to_alcove(rs, x).point;
  std::vector<std::vector<int>> out;
  for (const Component& comp : rs.components()) {
    std::vector<int> vanish;
    for (int k = 0; k < static_cast<int>(comp.root_indices.size()); ++k) {
      if (evaluate(rs.space(), rs.simple_roots()[comp.root_indices[k]], p)
              .is_zero()) {
        vanish.push_back(k);
      }
    }
    out.push_back(std::move(vanish));
  }
  return out;
}

AbelianGroup stalk_group(const AffineRootSystem& rs, const AffinePoint& x,
                         const Lattice& lambda) {
  if (!is_adjoint_lattice(rs, lambda)) {
    return torus_fixed_group(rs.space(), stabilizer_roots(rs, x), lambda).pi0;
  }
  const std::vector<Int> orders = stalk_orders(rs, x);
  const StalkPresentation s = cyclic_presentation(orders);
  return quotient_group(s.generators, s.relations);
}

AbelianGroup stalk_group(const AffineRootSystem& rs, const AffinePoint& x) {
  return stalk_group(rs, x, rs.lambda());
}

bool restriction_check(const AffineRootSystem& rs, const Lattice& lambda,
                       const AffinePoint& x, const AffinePoint& y) {
  if (!is_adjoint_lattice(rs, lambda)) {
    throw std::invalid_argument(
        "restriction check requires an adjoint-type lattice");
  }
  const std::vector<std::vector<int>> vx = vanishing_sets(rs, x);
  const std::vector<std::vector<int>> vy = vanishing_sets(rs, y);
  for (std::size_t c = 0; c < vx.size(); ++c) {
    for (int j : vy[c]) {
      if (std::find(vx[c].begin(), vx[c].end(), j) == vx[c].end()) {
        throw std::invalid_argument(
            "roots vanishing at the target do not all vanish at the source");
      }
    }
  }
  for (int c : infinite_components(rs)) {
    const IVec& labels = rs.components()[c].labels;
    const Int dx = complement_label_gcd(labels, vx[c]);
    const Int dy = complement_label_gcd(labels, vy[c]);
    if (dx % dy != 0) {
      return false;
    }
    // The generator square: the class of each basis tuple through the stalk
    // at x, reduced to the stalk at y, must match its direct class at y.
    for (std::size_t k = 0; k < vx[c].size(); ++k) {
      IVec unit(vx[c].size(), 0);
      unit[k] = 1;
      const Int through = mod_positive(stalk_class(labels, vx[c], unit), dy);
      Int direct = 0;
      auto pos = std::find(vy[c].begin(), vy[c].end(), vx[c][k]);
      if (pos != vy[c].end()) {
        IVec unit_y(vy[c].size(), 0);
        unit_y[pos - vy[c].begin()] = 1;
        direct = stalk_class(labels, vy[c], unit_y);
      }
      if (through != direct) {
        return false;
      }
    }
  }
  return true;
}

bool kernel_sequence_check(const AffineRootSystem& rs, const Lattice& lambda,
                           const AffinePoint& x) {
  if (!is_adjoint_lattice(rs, lambda)) {
    throw std::invalid_argument(
        "kernel sequence check requires an adjoint-type lattice");
  }
  const MetricSpace& space = rs.space();
  const int n = space.dim();
  const Lattice dual = dual_lattice(space, lambda);
  const AffinePoint p = fold_to_alcove(rs, x).point;
  const std::vector<std::vector<int>> vs = vanishing_sets(rs, p);

  struct Slot {
    int comp;
    int pos;
    int global;
  };
  std::vector<Slot> slots;
  for (int c = 0; c < static_cast<int>(vs.size()); ++c) {
    for (int k : vs[c]) {
      slots.push_back({c, k, rs.components()[c].root_indices[k]});
    }
  }
  const int m = static_cast<int>(slots.size());
  if (m == 0) {
    // 0 -> dual -> dual -> 0 -> 0 -> 0.
    return stalk_group(rs, p, lambda).is_trivial();
  }

  // Middle map: pair a dual-lattice vector with each vanishing gradient.
  const QMat basis = dual.basis();
  const int kb = static_cast<int>(basis.size());
  IMat pairings(kb, IVec(m, 0));
  for (int r = 0; r < kb; ++r) {
    for (int c = 0; c < m; ++c) {
      const Rat v =
          space.inner(basis[r], rs.simple_roots()[slots[c].global].gradient);
      if (!v.is_integer()) {
        throw std::logic_error("dual lattice pairs non-integrally with a root");
      }
      pairings[r][c] = v.as_integer();
    }
  }

  // Exactness on the left: the kernel of the pairing map equals the
  // sublattice orthogonal to the vanishing gradients.
  QMat ker_rows;
  for (const IVec& t : left_kernel(pairings)) {
    ker_rows.push_back(q_vecmat(to_q(t), basis));
  }
  const Lattice ker_pairing = Lattice::from_generators(n, ker_rows);
  QMat grads;
  for (const Slot& s : slots) {
    grads.push_back(rs.simple_roots()[s.global].gradient);
  }
  const QMat perp = orthogonal_rows(space, grads);
  const Lattice orthogonal =
      perp.empty() ? Lattice::zero(n) : lattice_intersect_subspace(dual, perp);
  bool ok = (ker_pairing == orthogonal);

  // Kernel of the label surjection inside Z^m.
  const std::vector<int> inf = infinite_components(rs);
  const int r = static_cast<int>(inf.size());
  Lattice ker_label = Lattice::standard(m);
  std::vector<Int> orders(r, 1);
  if (r > 0) {
    IMat label_map(m, IVec(r, 0));
    IMat rels(r, IVec(r, 0));
    for (int ci = 0; ci < r; ++ci) {
      const int c = inf[ci];
      orders[ci] = complement_label_gcd(rs.components()[c].labels, vs[c]);
      rels[ci][ci] = orders[ci];
      for (int j = 0; j < m; ++j) {
        if (slots[j].comp == c) {
          label_map[j][ci] = rs.components()[c].labels[slots[j].pos];
        }
      }
    }
    ker_label = Lattice::from_generators(m, to_q(preimage_lattice(label_map, rels)));

    // Surjectivity of the label map onto each cyclic factor.
    for (int ci = 0; ci < r; ++ci) {
      Int g = 0;
      for (int j = 0; j < m; ++j) {
        if (slots[j].comp == inf[ci]) {
          g = gcd_ll(g, rs.components()[inf[ci]].labels[slots[j].pos]);
        }
      }
      if (gcd_ll(g, orders[ci]) != 1) {
        ok = false;
      }
    }
  }

  // Exactness in the middle: image of the pairing map = kernel of the label
  // map.
  const Lattice image = Lattice::from_generators(m, to_q(pairings));
  ok = ok && (image == ker_label);

  // Exactness on the right: Z^m modulo the label kernel is the stalk.
  ok = ok && (lattice_quotient(Lattice::standard(m), ker_label) ==
              stalk_group(rs, p, lambda));
  return ok;
}

AbelianGroup StalkPresentation::group() const {
  return quotient_group(generators, relations);
}

void validate_sheaf(const ConstructibleSheaf& sheaf) {
  const auto fail = [](const std::string& why) {
    throw std::invalid_argument("incompatible restriction data: " + why);
  };
  const int nf = sheaf.complex.face_count();
  if (static_cast<int>(sheaf.stalks.size()) != nf) {
    fail("one stalk per face is required");
  }
  for (const StalkPresentation& s : sheaf.stalks) {
    if (s.generators < 0) fail("negative generator count");
    for (const IVec& row : s.relations) {
      if (static_cast<int>(row.size()) != s.generators) {
        fail("relation row width differs from the generator count");
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f == g || !sheaf.complex.face_subset(f, g)) continue;
      const auto it = sheaf.restrictions.find({f, g});
      if (it == sheaf.restrictions.end()) {
        fail("missing restriction map between comparable faces");
      }
      const IMat& m = it->second;
      if (static_cast<int>(m.size()) != sheaf.stalks[f].generators) {
        fail("restriction map row count differs from the source stalk");
      }
      for (const IVec& row : m) {
        if (static_cast<int>(row.size()) != sheaf.stalks[g].generators) {
          fail("restriction map column count differs from the target stalk");
        }
      }
      if (sheaf.stalks[g].generators == 0) continue;
      const Lattice target = relation_lattice(sheaf.stalks[g]);
      for (const IVec& rel : sheaf.stalks[f].relations) {
        const IMat image = compose_maps({rel}, m, sheaf.stalks[g].generators);
        if (!target.contains(to_q(image[0]))) {
          fail("restriction map does not preserve relations");
        }
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f == g || !sheaf.complex.face_subset(f, g)) continue;
      for (int h = 0; h < nf; ++h) {
        if (h == g || h == f || !sheaf.complex.face_subset(g, h)) continue;
        const int kh = sheaf.stalks[h].generators;
        if (kh == 0) continue;
        const IMat via = compose_maps(sheaf.restrictions.at({f, g}),
                                      sheaf.restrictions.at({g, h}), kh);
        const IMat& direct = sheaf.restrictions.at({f, h});
        const Lattice target = relation_lattice(sheaf.stalks[h]);
        for (std::size_t i = 0; i < via.size(); ++i) {
          QVec diff = q_sub(to_q(via[i]), to_q(direct[i]));
          if (!target.contains(diff)) {
            fail("restriction maps do not compose along a face chain");
          }
        }
      }
    }
  }
}

ConstructibleSheaf constant_sheaf(Polytope complex, StalkPresentation stalk) {
  ConstructibleSheaf s(std::move(complex));
  const int nf = s.complex.face_count();
  s.stalks.assign(nf, stalk);
  IMat id(stalk.generators, IVec(stalk.generators, 0));
  for (int i = 0; i < stalk.generators; ++i) id[i][i] = 1;
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f != g && s.complex.face_subset(f, g)) {
        s.restrictions[{f, g}] = id;
      }
    }
  }
  return s;
}

ConstructibleSheaf skyscraper_sheaf(Polytope complex, int face,
                                    StalkPresentation stalk) {
  ConstructibleSheaf s(std::move(complex));
  const int nf = s.complex.face_count();
  if (face < 0 || face >= nf) {
    throw std::invalid_argument("skyscraper face index out of range");
  }
  StalkPresentation trivial;
  s.stalks.assign(nf, trivial);
  s.stalks[face] = std::move(stalk);
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f != g && s.complex.face_subset(f, g)) {
        s.restrictions[{f, g}] =
            IMat(s.stalks[f].generators, IVec(s.stalks[g].generators, 0));
      }
    }
  }
  return s;
}

ConstructibleSheaf band_sheaf(const AffineRootSystem& rs, const QMat& vertices) {
  check_vertices_in_alcove(rs, vertices);
  Polytope p = Polytope::from_vertices(vertices);
  const std::vector<std::vector<Int>> orders = face_orders(rs, p);
  const int nf = p.face_count();
  const int k = static_cast<int>(infinite_components(rs).size());
  std::vector<std::vector<std::vector<Int>>> maps(
      nf, std::vector<std::vector<Int>>(nf, std::vector<Int>(k, 1)));
  return assemble_component_sheaf(std::move(p), orders, maps);
}

ConstructibleSheaf band_torsion_sheaf(const AffineRootSystem& rs,
                                      const QMat& vertices, Int p, int e) {
  if (p < 2 || e < 0) {
    throw std::invalid_argument("torsion subsheaf needs a prime p and e >= 0");
  }
  Int q = 1;
  for (int i = 0; i < e; ++i) q = checked_mul(q, p);
  check_vertices_in_alcove(rs, vertices);
  Polytope poly = Polytope::from_vertices(vertices);
  const std::vector<std::vector<Int>> full = face_orders(rs, poly);
  const int nf = poly.face_count();
  const int k = static_cast<int>(infinite_components(rs).size());
  std::vector<std::vector<Int>> orders(nf, std::vector<Int>(k, 1));
  for (int f = 0; f < nf; ++f) {
    for (int i = 0; i < k; ++i) {
      orders[f][i] = gcd_ll(full[f][i], q);
    }
  }
  // The torsion generator at a face is (d / gcd(d, p^e)) times the cyclic
  // generator, so the induced map multiplies by the ratio of those scales.
  std::vector<std::vector<std::vector<Int>>> maps(
      nf, std::vector<std::vector<Int>>(nf, std::vector<Int>(k, 1)));
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f == g || !poly.face_subset(f, g)) continue;
      for (int i = 0; i < k; ++i) {
        const Int source_scale = full[f][i] / orders[f][i];
        const Int target_scale = full[g][i] / orders[g][i];
        if (source_scale % target_scale != 0) {
          throw std::logic_error("torsion scales do not divide along a face pair");
        }
        maps[f][g][i] = source_scale / target_scale;
      }
    }
  }
  return assemble_component_sheaf(std::move(poly), orders, maps);
}

std::vector<AbelianGroup> cech_cohomology(const ConstructibleSheaf& sheaf) {
  validate_sheaf(sheaf);
  const int nf = sheaf.complex.face_count();

  // Strict chains in the face poset, grouped by length.  Faces are sorted
  // by dimension, so extending by larger indices visits every chain once.
  std::vector<std::vector<std::vector<int>>> chains;
  chains.push_back({});
  for (int f = 0; f < nf; ++f) chains[0].push_back({f});
  while (!chains.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& c : chains.back()) {
      for (int g = c.back() + 1; g < nf; ++g) {
        if (sheaf.complex.face_subset(c.back(), g)) {
          std::vector<int> ext = c;
          ext.push_back(g);
          next.push_back(std::move(ext));
        }
      }
    }
    chains.push_back(std::move(next));
  }
  while (!chains.empty() && chains.back().empty()) chains.pop_back();
  const int degrees = static_cast<int>(chains.size());

  // Generator offsets per chain, total sizes, embedded relation rows.
  std::vector<std::vector<int>> offset(degrees);
  std::vector<int> total(degrees, 0);
  std::vector<IMat> relations(degrees);
  std::vector<std::map<std::vector<int>, int>> position(degrees);
  for (int q = 0; q < degrees; ++q) {
    for (int i = 0; i < static_cast<int>(chains[q].size()); ++i) {
      position[q][chains[q][i]] = i;
      offset[q].push_back(total[q]);
      total[q] += sheaf.stalks[chains[q][i].back()].generators;
    }
    for (int i = 0; i < static_cast<int>(chains[q].size()); ++i) {
      for (const IVec& rel : sheaf.stalks[chains[q][i].back()].relations) {
        IVec row(total[q], 0);
        std::copy(rel.begin(), rel.end(), row.begin() + offset[q][i]);
        relations[q].push_back(std::move(row));
      }
    }
  }

  // Differentials: alternating chain-element drops; dropping the largest
  // face applies the restriction map from the new largest face.
  std::vector<IMat> diff(degrees);
  for (int q = 0; q + 1 < degrees; ++q) {
    diff[q] = IMat(total[q], IVec(total[q + 1], 0));
    for (int ci = 0; ci < static_cast<int>(chains[q + 1].size()); ++ci) {
      const std::vector<int>& c = chains[q + 1][ci];
      const int col = offset[q + 1][ci];
      const int kc = sheaf.stalks[c.back()].generators;
      for (int drop = 0; drop < static_cast<int>(c.size()); ++drop) {
        std::vector<int> b = c;
        b.erase(b.begin() + drop);
        const int row = offset[q][position[q].at(b)];
        const Int sign = (drop % 2 == 0) ? 1 : -1;
        if (drop + 1 < static_cast<int>(c.size())) {
          for (int t = 0; t < kc; ++t) {
            diff[q][row + t][col + t] = checked_add(diff[q][row + t][col + t], sign);
          }
        } else {
          const IMat& m = sheaf.restrictions.at({c[c.size() - 2], c.back()});
          for (std::size_t t = 0; t < m.size(); ++t) {
            for (int j = 0; j < kc; ++j) {
              diff[q][row + t][col + j] =
                  checked_add(diff[q][row + t][col + j], checked_mul(sign, m[t][j]));
            }
          }
        }
      }
    }
  }

  std::vector<AbelianGroup> h(std::max(degrees, sheaf.complex.dim() + 1));
  for (int q = 0; q < degrees; ++q) {
    if (total[q] == 0) continue;
    IMat cocycles;
    if (q + 1 < degrees && total[q + 1] > 0) {
      cocycles = preimage_lattice(diff[q], relations[q + 1]);
    } else {
      cocycles = i_identity(total[q]);
    }
    IMat boundary = relations[q];
    if (q > 0) {
      for (const IVec& row : diff[q - 1]) boundary.push_back(row);
    }
    const Lattice closed = Lattice::from_generators(total[q], to_q(cocycles));
    const Lattice exact = Lattice::from_generators(total[q], to_q(boundary));
    if (!closed.contains_lattice(exact)) {
      throw std::invalid_argument(
          "incompatible restriction data: the complex differential does not "
          "square to zero");
    }
    h[q] = lattice_quotient(closed, exact);
  }
  return h;
}

}  // namespace qham
