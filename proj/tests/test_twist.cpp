#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qham/cone.hpp"
#include "qham/linalg.hpp"
#include "qham/rootsys.hpp"
#include "qham/twist.hpp"

using namespace qham;

namespace {

GroupSpec gs(std::vector<SimpleFactor> factors, std::vector<int> perm = {},
             int order = 1) {
  return GroupSpec{std::move(factors), TwistSpec{std::move(perm), order}};
}

QVec qv(std::vector<Rat> v) { return v; }

bool qv_zero(const QVec& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// Orbit of the simple-root gradients under the reflections they generate:
// the full gradient set of a finite system.
std::vector<QVec> gradient_orbit(const MetricSpace& sp,
                                 const std::vector<AffineFunctional>& simples) {
  std::set<QVec> seen;
  std::vector<QVec> queue;
  for (const auto& s : simples) {
    if (seen.insert(s.gradient).second) queue.push_back(s.gradient);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    QVec g = queue[head];
    for (const auto& s : simples) {
      AffineFunctional image =
          reflect_functional(sp, s, AffineFunctional{g, Rat(0)});
      if (seen.insert(image.gradient).second) queue.push_back(image.gradient);
    }
  }
  return {seen.begin(), seen.end()};
}

// Matrix S (acting on column vectors) of the chart isometry realizing a node
// permutation of a full-rank simple system: alpha_i(S x) = alpha_{perm[i]}(x).
QMat automorphism_matrix(const MetricSpace& sp,
                         const std::vector<AffineFunctional>& simples,
                         const std::vector<int>& perm) {
  const int d = sp.dim();
  REQUIRE(static_cast<int>(simples.size()) == d);
  QMat c, cp;
  for (int i = 0; i < d; ++i) {
    c.push_back(coordinate_form(sp, simples[i]));
    cp.push_back(coordinate_form(sp, simples[perm[i]]));
  }
  QMat cp_cols = q_transpose(cp);
  QMat s_cols;
  for (int j = 0; j < d; ++j) {
    auto col = q_solve_right(c, cp_cols[j]);
    REQUIRE(col.has_value());
    s_cols.push_back(*col);
  }
  return q_transpose(s_cols);
}

// Row basis of the fixed subspace {x : S x = x}.
QMat fixed_space(QMat s) {
  for (size_t i = 0; i < s.size(); ++i) s[i][i] = s[i][i] - Rat(1);
  return q_left_nullspace(q_transpose(s));
}

TypeSpec fin(const std::string& family, int rank) {
  TypeSpec t;
  t.family = family;
  t.rank = rank;
  t.twist = 1;
  t.affine = false;
  return t;
}

// The character-lattice projection property: for a simply connected group
// with chart automorphism S, the orthogonal projection of the weight lattice
// onto the fixed subspace equals the dual (in that subspace) of the lattice
// spanned by the coroots of the projected root gradients.
void check_projected_lattice(const std::vector<TypeSpec>& specs,
                             const std::vector<int>& node_perm) {
  AffineRootSystem rs = build_from_type(specs);
  const MetricSpace& sp = rs.space();
  QMat s = automorphism_matrix(sp, rs.simple_roots(), node_perm);
  CHECK(q_mul(q_transpose(s), q_mul(sp.gram(), s)) == sp.gram());
  QMat fix = fixed_space(s);
  REQUIRE(!fix.empty());
  QMat proj = projection_onto_span(sp, fix);
  QMat coroot_rows;
  for (const QVec& g : gradient_orbit(sp, rs.simple_roots())) {
    QVec pg = q_mul(QMat{g}, proj)[0];
    if (!qv_zero(pg)) {
      coroot_rows.push_back(coroot(sp, AffineFunctional{pg, Rat(0)}));
    }
  }
  Lattice coroots = Lattice::from_generators(sp.dim(), coroot_rows);
  Lattice from_roots = dual_in_span(sp, coroots);
  Lattice projected_characters = map_lattice(rs.lambda(), proj);
  CHECK(from_roots == projected_characters);
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

TEST_CASE("twisted datum of untwisted simple groups") {
  // SU(n+1) with the identity automorphism.
  TwistedDatum d = twisted_datum(gs({{"A", 2}}));
  const AffineRootSystem& rs = d.root_system;
  REQUIRE(rs.components().size() == 1);
  CHECK(type_name(rs.components()[0].spec) == "A2~1");
  CHECK(rs.dim() == 2);
  CHECK(d.translation == qv({Rat(0), Rat(0)}));
  CHECK(rs.in_alcove(d.translation));
  CHECK(d.lambda() == rs.lambda());
  CHECK(rs.simple_roots().size() == 3);

  TwistedDatum sp6 = twisted_datum(gs({{"C", 3}}));
  CHECK(type_name(sp6.root_system.components()[0].spec) == "C3~1");
  CHECK(sp6.root_system.lambda() == Lattice::standard(3));

  TwistedDatum g2 = twisted_datum(gs({{"G", 2}}));
  CHECK(type_name(g2.root_system.components()[0].spec) == "G2~1");
}

TEST_CASE("twisted datum of outer automorphisms") {
  // SU(5) with the flip: the rank-2 twisted system on the fixed torus.
  TwistedDatum d = twisted_datum(gs({{"A", 4}}, {}, 2));
  const AffineRootSystem& rs = d.root_system;
  REQUIRE(rs.components().size() == 1);
  CHECK(type_name(rs.components()[0].spec) == "A4~2");
  CHECK(rs.dim() == 2);
  CHECK(rs.components()[0].labels == std::vector<long long>{1, 2, 2});
  std::set<QVec> verts;
  for (const auto& v : alcove_vertices(rs)) verts.insert(v);
  std::set<QVec> expect{qv({Rat(0), Rat(0)}), qv({Rat(1, 2), Rat(0)}),
                        qv({Rat(1, 2), Rat(1, 2)})};
  CHECK(verts == expect);

  CHECK(type_name(twisted_datum(gs({{"D", 4}}, {}, 3))
                      .root_system.components()[0]
                      .spec) == "D4~3");
  TwistedDatum e6 = twisted_datum(gs({{"E", 6}}, {}, 2));
  CHECK(type_name(e6.root_system.components()[0].spec) == "E6~2");
  CHECK(e6.root_system.dim() == 4);

  // SU(3) with the flip: the rank-1 system whose labels satisfy
  // bar(alpha_0) = -2 bar(alpha_1).
  TwistedDatum a22 = twisted_datum(gs({{"A", 2}}, {}, 2));
  CHECK(type_name(a22.root_system.components()[0].spec) == "A2~2");
  const auto& simples = a22.root_system.simple_roots();
  REQUIRE(simples.size() == 2);
  QVec g0 = simples[0].gradient, g1 = simples[1].gradient;
  CHECK(g0[0] == Rat(-2) * g1[0]);
  CHECK(a22.root_system.lambda() ==
        Lattice::from_generators(1, {qv({Rat(1, 2)})}));
}

TEST_CASE("twisted datum of factor-permuting automorphisms") {
  // K0 x K0 with the swap: same coordinate formulas with halved constants,
  // doubled metric.
  TwistedDatum d = twisted_datum(gs({{"A", 1}, {"A", 1}}, {1, 0}));
  const AffineRootSystem& rs = d.root_system;
  REQUIRE(rs.components().size() == 1);
  CHECK(type_name(rs.components()[0].spec) == "A1~1");
  CHECK(rs.components()[0].spec.scale == Rat(2));
  CHECK(rs.space().gram() == QMat{qv({Rat(4)})});
  REQUIRE(rs.simple_roots().size() == 2);
  CHECK(coordinate_form(rs.space(), rs.simple_roots()[0]) == qv({Rat(-1)}));
  CHECK(rs.simple_roots()[0].constant == Rat(1, 2));
  CHECK(coordinate_form(rs.space(), rs.simple_roots()[1]) == qv({Rat(1)}));
  CHECK(rs.simple_roots()[1].constant == Rat(0));
  CHECK(rs.lambda() == Lattice::from_generators(1, {qv({Rat(1, 8)})}));

  // Cyclic rotation of three SU(3) factors: constants shrink by 3, and the
  // alcove with them.
  TwistedDatum t3 = twisted_datum(gs({{"A", 2}, {"A", 2}, {"A", 2}}, {1, 2, 0}));
  CHECK(type_name(t3.root_system.components()[0].spec) == "A2~1");
  CHECK(t3.root_system.components()[0].spec.scale == Rat(3));
  std::set<QVec> verts;
  for (const auto& v : alcove_vertices(t3.root_system)) verts.insert(v);
  std::set<QVec> expect{qv({Rat(0), Rat(0)}), qv({Rat(2, 9), Rat(-1, 9)}),
                        qv({Rat(1, 9), Rat(1, 9)})};
  CHECK(verts == expect);

  // Swap combined with the flip on each SU(5) factor.
  TwistedDatum sf = twisted_datum(gs({{"A", 4}, {"A", 4}}, {1, 0}, 2));
  const AffineRootSystem& rs2 = sf.root_system;
  CHECK(type_name(rs2.components()[0].spec) == "A4~2");
  CHECK(rs2.space().gram() == QMat{qv({Rat(4), Rat(0)}), qv({Rat(0), Rat(4)})});
  CHECK(rs2.simple_roots()[0].constant == Rat(1, 2));
  CHECK(coordinate_form(rs2.space(), rs2.simple_roots()[0]) ==
        qv({Rat(-2), Rat(0)}));

  // A genuine product: one untwisted factor per singleton cycle.
  TwistedDatum prod = twisted_datum(gs({{"A", 1}, {"C", 2}}));
  REQUIRE(prod.root_system.components().size() == 2);
  CHECK(type_name(prod.root_system.components()[0].spec) == "A1~1");
  CHECK(type_name(prod.root_system.components()[1].spec) == "C2~1");
  CHECK(prod.root_system.lambda().contains(qv({Rat(1, 4), Rat(0), Rat(0)})));
  CHECK(!prod.root_system.lambda().contains(qv({Rat(1, 8), Rat(0), Rat(0)})));
}

TEST_CASE("twisted datum rejects inconsistent specifications") {
  CHECK_THROWS_AS(twisted_datum(gs({})), std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2}, {"A", 3}}, {1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2}}, {0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2}, {"A", 2}}, {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2}, {"A", 2}}, {0, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"C", 3}}, {}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 3}}, {}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"D", 4}}, {}, 4)), std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2}}, {}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(twisted_datum(gs({{"A", 2, Rat(0)}})), std::invalid_argument);
  CHECK_THROWS_AS(
      twisted_datum(gs({{"A", 2, Rat(1)}, {"A", 2, Rat(2)}}, {1, 0})),
      std::invalid_argument);
}

TEST_CASE("projected character lattice equals dual of folded coroots") {
  // Identity automorphisms: classical families through rank 6 and the
  // exceptional types.
  for (int n = 1; n <= 6; ++n)
    check_projected_lattice({fin("A", n)}, identity_perm(n));
  for (int n = 2; n <= 6; ++n)
    check_projected_lattice({fin("B", n)}, identity_perm(n));
  for (int n = 2; n <= 6; ++n)
    check_projected_lattice({fin("C", n)}, identity_perm(n));
  for (int n = 4; n <= 6; ++n)
    check_projected_lattice({fin("D", n)}, identity_perm(n));
  check_projected_lattice({fin("G", 2)}, identity_perm(2));
  check_projected_lattice({fin("F", 4)}, identity_perm(4));
  for (int n = 6; n <= 8; ++n)
    check_projected_lattice({fin("E", n)}, identity_perm(n));

  // Path flips of the A series.
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> flip(n);
    for (int i = 0; i < n; ++i) flip[i] = n - 1 - i;
    check_projected_lattice({fin("A", n)}, flip);
  }
  // Tip swaps of the D series.
  for (int n = 4; n <= 6; ++n) {
    std::vector<int> flip = identity_perm(n);
    std::swap(flip[n - 2], flip[n - 1]);
    check_projected_lattice({fin("D", n)}, flip);
  }
  // The E6 flip and the D4 rotation.
  check_projected_lattice({fin("E", 6)}, {5, 1, 4, 3, 2, 0});
  check_projected_lattice({fin("D", 4)}, {2, 1, 3, 0});

  // Factor swaps, including one composed with a flip, and a 3-cycle.
  check_projected_lattice({fin("A", 2), fin("A", 2)}, {2, 3, 0, 1});
  check_projected_lattice({fin("C", 2), fin("C", 2)}, {2, 3, 0, 1});
  check_projected_lattice({fin("G", 2), fin("G", 2)}, {2, 3, 0, 1});
  check_projected_lattice({fin("A", 4), fin("A", 4)},
                          {4, 5, 6, 7, 3, 2, 1, 0});
  check_projected_lattice({fin("A", 1), fin("A", 1), fin("A", 1)}, {1, 2, 0});
}

TEST_CASE("centralizer data at the vertices of the compact symplectic groups") {
  for (int n = 2; n <= 4; ++n) {
    TwistedDatum d = twisted_datum(gs({{"C", n}}));
    for (int i = 0; i <= n; ++i) {
      QVec a(n, Rat(0));
      for (int k = 0; k < i; ++k) a[k] = Rat(1, 2);
      CentralizerDatum cz = centralizer_datum(d, a);
      CHECK(cz.torus_rank == n);
      CHECK(cz.semisimple_rank == n);
      CHECK(cz.central_torus_rank == 0);
      CHECK(cz.dimension == n + 2 * i * i + 2 * (n - i) * (n - i));
      std::vector<std::pair<std::string, int>> types;
      for (const auto& comp : cz.components) {
        types.push_back({comp.family, comp.rank});
        CHECK(comp.invariants == std::vector<Int>{2});
      }
      std::vector<std::pair<std::string, int>> expect;
      auto block = [](int r) {
        return std::pair<std::string, int>{r == 1 ? "A" : "C", r};
      };
      if (i > 0) expect.push_back(block(i));
      if (i < n) expect.push_back(block(n - i));
      CHECK(types == expect);
      if (i == 0 || i == n) {
        CHECK(cz.invariants == std::vector<Int>{2});
      } else {
        CHECK(cz.invariants == std::vector<Int>{2, 2});
      }
    }
  }
  TwistedDatum sp8 = twisted_datum(gs({{"C", 4}}));
  QVec x2 = qv({Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)});
  CHECK(centralizer_datum(sp8, x2).label == "Sp(4)×Sp(4)");
  QVec x1 = qv({Rat(1, 2), Rat(0), Rat(0), Rat(0)});
  CHECK(centralizer_datum(sp8, x1).label == "SU(2)×Sp(6)");
  QVec x0 = qv({Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(centralizer_datum(sp8, x0).label == "Sp(8)");
}

TEST_CASE("centralizer labels distinguish the two rank-one lattices") {
  TwistedDatum d = twisted_datum(gs({{"A", 2}}, {}, 2));
  CentralizerDatum at_zero = centralizer_datum(d, qv({Rat(0)}));
  CHECK(at_zero.label == "SO(3)");
  CHECK(at_zero.invariants.empty());
  CHECK(at_zero.dimension == 3);
  REQUIRE(at_zero.components.size() == 1);
  CHECK(at_zero.components[0].family == "A");
  CHECK(at_zero.components[0].rank == 1);

  CentralizerDatum at_half = centralizer_datum(d, qv({Rat(1, 2)}));
  CHECK(at_half.label == "SU(2)");
  CHECK(at_half.invariants == std::vector<Int>{2});
  CHECK(at_half.dimension == 3);

  CentralizerDatum inside = centralizer_datum(d, qv({Rat(1, 4)}));
  CHECK(inside.label == "T^1");
  CHECK(inside.components.empty());
  CHECK(inside.semisimple_rank == 0);
  CHECK(inside.central_torus_rank == 1);
  CHECK(inside.dimension == 1);

  CHECK_THROWS_AS(centralizer_datum(d, qv({Rat(3, 4)})), std::domain_error);
  CHECK_THROWS_AS(centralizer_datum(d, qv({Rat(-1, 8)})), std::domain_error);
}

TEST_CASE("centralizer data on products and folded factors") {
  // The swap-twisted double of SU(2) at its alcove endpoints.
  TwistedDatum dbl = twisted_datum(gs({{"A", 1}, {"A", 1}}, {1, 0}));
  CentralizerDatum cz0 = centralizer_datum(dbl, qv({Rat(0)}));
  CHECK(cz0.label == "SU(2)");
  CHECK(cz0.dimension == 3);
  CentralizerDatum czh = centralizer_datum(dbl, qv({Rat(1, 2)}));
  CHECK(czh.label == "SU(2)");
  CHECK(czh.invariants == std::vector<Int>{2});
  CHECK(centralizer_datum(dbl, qv({Rat(1, 4)})).label == "T^1");

  // SU(2) x Sp(4) at a point that is a vertex in each factor.
  TwistedDatum prod = twisted_datum(gs({{"A", 1}, {"C", 2}}));
  CentralizerDatum cz =
      centralizer_datum(prod, qv({Rat(0), Rat(1, 2), Rat(0)}));
  CHECK(cz.label == "SU(2)×SU(2)×SU(2)");
  CHECK(cz.invariants == std::vector<Int>{2, 2, 2});
  CHECK(cz.dimension == 9);

  // An edge midpoint: one wall plus a central torus direction.
  CentralizerDatum edge =
      centralizer_datum(prod, qv({Rat(1, 8), Rat(1, 2), Rat(1, 4)}));
  CHECK(edge.label == "SU(2)×T^2");
  CHECK(edge.central_torus_rank == 2);

  // The triality-fixed subgroup of Spin(8) at the base vertex.
  TwistedDatum tri = twisted_datum(gs({{"D", 4}}, {}, 3));
  CentralizerDatum g2 = centralizer_datum(tri, qv({Rat(0), Rat(0)}));
  CHECK(g2.label == "G2");
  CHECK(g2.invariants.empty());
  CHECK(g2.dimension == 14);
}

TEST_CASE("every alcove vertex has full semisimple rank") {
  std::vector<GroupSpec> specs = {
      gs({{"A", 2}}),          gs({{"C", 3}}),       gs({{"G", 2}}),
      gs({{"A", 4}}, {}, 2),   gs({{"D", 4}}, {}, 3),
      gs({{"A", 1}, {"A", 1}}, {1, 0}),
  };
  for (const auto& g : specs) {
    TwistedDatum d = twisted_datum(g);
    for (const QVec& v : alcove_vertices(d.root_system)) {
      CentralizerDatum cz = centralizer_datum(d, v);
      CHECK(cz.semisimple_rank == d.root_system.dim());
      CHECK(cz.central_torus_rank == 0);
    }
  }
}

TEST_CASE("tangent cone chambers at alcove points") {
  TwistedDatum su2 = twisted_datum(gs({{"A", 1}}));
  TangentCone at0 = tangent_cone_chamber(su2, qv({Rat(0)}));
  REQUIRE(at0.inequalities.size() == 1);
  CHECK(at0.inequalities[0].a == qv({Rat(1)}));
  CHECK(at0.rays == QMat{qv({Rat(1)})});
  CHECK(at0.lineality.empty());

  TangentCone mid = tangent_cone_chamber(su2, qv({Rat(1, 8)}));
  CHECK(mid.inequalities.empty());
  CHECK(mid.rays.empty());
  CHECK(mid.lineality == QMat{qv({Rat(1)})});

  TwistedDatum sp4 = twisted_datum(gs({{"C", 2}}));
  TangentCone vert = tangent_cone_chamber(sp4, qv({Rat(1, 2), Rat(0)}));
  REQUIRE(vert.rays.size() == 2);
  CHECK(vert.lineality.empty());
  std::set<QVec> rays(vert.rays.begin(), vert.rays.end());
  std::set<QVec> expect{qv({Rat(-1, 2), Rat(0)}), qv({Rat(0), Rat(1, 2)})};
  CHECK(rays == expect);

  TangentCone edge = tangent_cone_chamber(sp4, qv({Rat(1, 2), Rat(1, 4)}));
  REQUIRE(edge.rays.size() == 1);
  CHECK(edge.rays[0] == qv({Rat(-1, 2), Rat(0)}));
  REQUIRE(edge.lineality.size() == 1);
  CHECK(edge.lineality[0][0] == Rat(0));

  // Membership in the generated cone agrees with the wall inequalities on a
  // grid of directions, and the alcove lies inside its own tangent cones.
  for (const QVec& base :
       {qv({Rat(1, 2), Rat(0)}), qv({Rat(1, 2), Rat(1, 4)}),
        qv({Rat(1, 4), Rat(1, 8)}), qv({Rat(0), Rat(0)})}) {
    TangentCone tc = tangent_cone_chamber(sp4, base);
    QMat gens = cone_generator_rows(tc);
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        QVec v = qv({Rat(x, 3), Rat(y, 3)});
        bool in = true;
        for (const auto& c : tc.inequalities) {
          Rat val(0);
          for (size_t k = 0; k < v.size(); ++k) val = val + c.a[k] * v[k];
          if (!val.is_nonneg()) in = false;
        }
        CHECK(cone_contains(gens, v) == in);
      }
    }
    for (const QVec& w : alcove_vertices(sp4.root_system)) {
      QVec diff(w.size());
      for (size_t k = 0; k < w.size(); ++k) diff[k] = w[k] - base[k];
      CHECK(cone_contains(gens, diff));
    }
  }

  CHECK_THROWS_AS(tangent_cone_chamber(sp4, qv({Rat(2), Rat(0)})),
                  std::domain_error);
}
