#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qham/localroot.hpp"

using namespace qham;

namespace {

AffineFunctional af(std::initializer_list<Rat> gradient, Rat constant = Rat(0)) {
  return {QVec(gradient), constant};
}

std::vector<AffineFunctional> sorted_fns(std::vector<AffineFunctional> fs) {
  std::sort(fs.begin(), fs.end(), [](const AffineFunctional& a, const AffineFunctional& b) {
    if (a.gradient != b.gradient) return a.gradient < b.gradient;
    return a.constant < b.constant;
  });
  return fs;
}

std::vector<std::string> typeset(const AffineRootSystem& rs) {
  std::vector<std::string> out;
  for (const auto& c : rs.components()) out.push_back(type_name(c.spec));
  std::sort(out.begin(), out.end());
  return out;
}

// One wall/lattice configuration: checks the ambiguous-wall set, then for
// every subset of it builds the doubled system, pins its classification,
// and round-trips the subset through doubled_simple_roots.  The resulting
// systems must be pairwise distinct.
struct ScalingCase {
  std::vector<int> doubled;                // sorted subset of the ambiguous walls
  std::vector<std::string> expected_types;  // sorted component names
};

void check_scaling_battery(const MetricSpace& sp,
                           const std::vector<AffineFunctional>& walls,
                           const Lattice& lam,
                           const std::vector<int>& expected_ambiguous,
                           const std::vector<ScalingCase>& cases) {
  CHECK(ambiguous_reflections(sp, walls, lam) == expected_ambiguous);
  REQUIRE(cases.size() == (size_t(1) << expected_ambiguous.size()));
  std::vector<std::vector<AffineFunctional>> seen;
  for (const ScalingCase& c : cases) {
    AffineRootSystem rs = root_system_from_walls(sp, walls, lam, c.doubled);
    CHECK(typeset(rs) == c.expected_types);
    CHECK(doubled_simple_roots(rs) == c.doubled);
    std::vector<AffineFunctional> key = sorted_fns(rs.simple_roots());
    for (const auto& other : seen) CHECK(key != other);
    seen.push_back(std::move(key));
  }
}

// Restricts a built system to the given vertices and glues the restriction
// back; the glued system must reproduce the original simple roots.
void check_glue_recovers(const AffineRootSystem& rs) {
  LocalRootSystem l = restrict_to_polytope(rs, alcove_vertices(rs));
  GlueResult g = glue_local_system(l);
  REQUIRE_MESSAGE(g.system.has_value(), g.failure);
  CHECK(sorted_fns(g.system->simple_roots()) == sorted_fns(rs.simple_roots()));
  CHECK(typeset(*g.system) == typeset(rs));
}

}  // namespace

TEST_CASE("simple-system test accepts simple systems") {
  MetricSpace line(QMat{{Rat(1)}});
  MetricSpace plane(q_identity(2));

  SUBCASE("a single wall") {
    auto r = validate_simple_system(line, {af({Rat(1)})});
    CHECK(r.accepted);
    CHECK(r.reason.empty());
    CHECK(r.alcove.size() == 1);
  }
  SUBCASE("the empty family") {
    CHECK(validate_simple_system(plane, {}).accepted);
  }
  SUBCASE("a 2pi/3 pair") {
    auto r = validate_simple_system(
        plane, {af({Rat(1), Rat(0)}), af({Rat(-1, 2), Rat(1, 2)})});
    CHECK(r.accepted);
  }
  SUBCASE("an antiparallel pair bounding a strip") {
    auto r = validate_simple_system(line, {af({Rat(1)}), af({Rat(-1)}, Rat(1))});
    CHECK(r.accepted);
    CHECK(r.alcove.size() == 2);
  }
}

TEST_CASE("simple-system test rejects non-simple families") {
  MetricSpace line(QMat{{Rat(1)}});
  MetricSpace plane(q_identity(2));

  SUBCASE("an acute pair") {
    auto r = validate_simple_system(plane, {af({Rat(1), Rat(0)}), af({Rat(1), Rat(1)})});
    CHECK(!r.accepted);
    CHECK(r.reason == "pair closes an acute angle");
    CHECK(r.first == 0);
    CHECK(r.second == 1);
  }
  SUBCASE("a duplicated wall") {
    auto r = validate_simple_system(line, {af({Rat(1)}), af({Rat(1)})});
    CHECK(!r.accepted);
    CHECK(r.reason == "pair closes an acute angle");
  }
  SUBCASE("a non-crystallographic angle") {
    auto r = validate_simple_system(plane, {af({Rat(1), Rat(0)}), af({Rat(-1), Rat(2)})});
    CHECK(!r.accepted);
    CHECK(r.reason == "pair angle is not crystallographic");
    CHECK(r.angle_measure == Rat(4, 5));
  }
  SUBCASE("opposite walls through one point") {
    auto r = validate_simple_system(line, {af({Rat(1)}), af({Rat(-1)})});
    CHECK(!r.accepted);
    CHECK(r.reason == "no point is strictly positive on every wall");
  }
  SUBCASE("a zero gradient is an error, not a verdict") {
    CHECK_THROWS_AS(validate_simple_system(line, {af({Rat(0)})}), std::invalid_argument);
  }
}

TEST_CASE("wall scaling ambiguity") {
  SUBCASE("rank one, weight lattice") {
    // Chart of one root alpha with |alpha|^2 = 2; lambda = Z * (alpha/2).
    MetricSpace sp(QMat{{Rat(2)}});
    Lattice lam = Lattice::from_generators(1, {{Rat(1, 2)}});
    CHECK(ambiguous_reflections(sp, {af({Rat(1, 2)})}, lam) == std::vector<int>{0});
    // The root itself is not primitive in this lattice: rejected, not empty.
    CHECK_THROWS_AS(ambiguous_reflections(sp, {af({Rat(1)})}, lam), std::invalid_argument);
  }
  SUBCASE("rank one, root lattice") {
    MetricSpace sp(QMat{{Rat(2)}});
    Lattice lam = Lattice::standard(1);
    CHECK(ambiguous_reflections(sp, {af({Rat(1)})}, lam) == std::vector<int>{0});
  }
  SUBCASE("two adjacent walls pair oddly") {
    // Simply-laced rank two over its root lattice: no wall is ambiguous.
    MetricSpace sp(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    Lattice lam = Lattice::standard(2);
    std::vector<AffineFunctional> walls = {af({Rat(1), Rat(0)}), af({Rat(0), Rat(1)})};
    CHECK(ambiguous_reflections(sp, walls, lam).empty());
  }
  SUBCASE("only the short orthogonal wall is ambiguous") {
    MetricSpace sp(q_identity(2));
    Lattice lam = Lattice::standard(2);
    std::vector<AffineFunctional> walls = {af({Rat(1), Rat(-1)}), af({Rat(0), Rat(1)})};
    CHECK(ambiguous_reflections(sp, walls, lam) == std::vector<int>{1});
  }
  SUBCASE("full-lattice weight chart sees no ambiguity") {
    AffineRootSystem rs = build_from_type({TypeSpec{"A", 2, 1}});
    CHECK(ambiguous_reflections(rs.space(), rs.simple_roots(), rs.lambda()).empty());
  }
}

TEST_CASE("doubling walls: errors") {
  MetricSpace sp(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
  Lattice lam = Lattice::standard(2);
  std::vector<AffineFunctional> walls = {af({Rat(1), Rat(0)}), af({Rat(0), Rat(1)})};
  CHECK_THROWS_AS(root_system_from_walls(sp, walls, lam, {0}), std::invalid_argument);
  CHECK_THROWS_AS(root_system_from_walls(sp, walls, lam, {2}), std::invalid_argument);
  CHECK_THROWS_AS(root_system_from_walls(sp, walls, lam, {-1}), std::invalid_argument);
  MetricSpace line(QMat{{Rat(1)}});
  std::vector<AffineFunctional> pair = {af({Rat(1)}), af({Rat(-1)}, Rat(1))};
  CHECK_THROWS_AS(root_system_from_walls(line, pair, Lattice::standard(1), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("doubling walls: exhaustive rank-one and rank-two batteries") {
  SUBCASE("affine segment over the integers") {
    MetricSpace sp(QMat{{Rat(1)}});
    Lattice lam = Lattice::standard(1);
    std::vector<AffineFunctional> walls = {af({Rat(1)}), af({Rat(-1)}, Rat(1))};
    check_scaling_battery(sp, walls, lam, {0, 1},
                          {{{}, {"A1~1"}},
                           {{0}, {"A2~2"}},
                           {{1}, {"A2~2"}},
                           {{0, 1}, {"A1~1"}}});
  }
  SUBCASE("affine triangle with two ambiguous walls") {
    MetricSpace sp(q_identity(2));
    Lattice lam = Lattice::standard(2);
    std::vector<AffineFunctional> walls = {af({Rat(-1), Rat(0)}, Rat(1, 2)),
                                           af({Rat(1), Rat(-1)}),
                                           af({Rat(0), Rat(1)})};
    check_scaling_battery(sp, walls, lam, {0, 2},
                          {{{}, {"D3~2"}},
                           {{0}, {"A4~2"}},
                           {{2}, {"A4~2"}},
                           {{0, 2}, {"C2~1"}}});
  }
  SUBCASE("finite rank two with one ambiguous wall") {
    MetricSpace sp(q_identity(2));
    Lattice lam = Lattice::standard(2);
    std::vector<AffineFunctional> walls = {af({Rat(1), Rat(-1)}), af({Rat(0), Rat(1)})};
    check_scaling_battery(sp, walls, lam, {1},
                          {{{}, {"C2"}}, {{1}, {"C2"}}});
  }
  SUBCASE("finite simply-laced rank two: nothing to double") {
    MetricSpace sp(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    Lattice lam = Lattice::standard(2);
    std::vector<AffineFunctional> walls = {af({Rat(1), Rat(0)}), af({Rat(0), Rat(1)})};
    check_scaling_battery(sp, walls, lam, {}, {{{}, {"A2"}}});
  }
  SUBCASE("finite rank one over a half-integer lattice") {
    MetricSpace sp(QMat{{Rat(1)}});
    Lattice lam = Lattice::from_generators(1, {{Rat(1, 2)}});
    std::vector<AffineFunctional> walls = {af({Rat(1, 2)})};
    check_scaling_battery(sp, walls, lam, {0},
                          {{{}, {"A1"}}, {{0}, {"A1"}}});
  }
  SUBCASE("built systems round-trip their own doubling sets") {
    CHECK(doubled_simple_roots(build_from_type({TypeSpec{"A", 2, 2}})) ==
          std::vector<int>{0});
    CHECK(doubled_simple_roots(build_from_type({TypeSpec{"C", 2, 1}})) ==
          std::vector<int>{0, 2});
    CHECK(doubled_simple_roots(build_from_type({TypeSpec{"D", 3, 2}})) ==
          std::vector<int>{1});
    CHECK(doubled_simple_roots(build_from_type({TypeSpec{"A", 3, 1}})).empty());
  }
}

TEST_CASE("reflection closure") {
  SUBCASE("simply-laced rank two closes to six roots") {
    MetricSpace sp(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    auto closure = reflection_closure(sp, {af({Rat(1), Rat(0)}), af({Rat(0), Rat(1)})});
    CHECK(closure.size() == 6);
    CHECK(std::count_if(closure.begin(), closure.end(), [](const AffineFunctional& f) {
            return f.gradient == QVec{Rat(1), Rat(1)};
          }) == 1);
  }
  SUBCASE("negatives of the seed are always present") {
    MetricSpace line(QMat{{Rat(1)}});
    auto closure = reflection_closure(line, {af({Rat(1)}, Rat(-1, 3))});
    CHECK(closure.size() == 2);
  }
  SUBCASE("an affine pair does not close") {
    MetricSpace line(QMat{{Rat(1)}});
    CHECK_THROWS_AS(reflection_closure(line, {af({Rat(1)}), af({Rat(-1)}, Rat(1))}),
                    std::logic_error);
  }
}

TEST_CASE("face-local data validation") {
  MetricSpace plane(q_identity(2));
  Lattice z2 = Lattice::standard(2);
  QMat triangle = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};

  SUBCASE("a root must vanish at its vertex") {
    MetricSpace line(QMat{{Rat(1)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(line, {{Rat(1)}}, Lattice::standard(1),
                                      {{af({Rat(1)})}}),
        "vertex root does not vanish at its vertex");
  }
  SUBCASE("a root must keep one sign on the carrier") {
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(plane, triangle, z2,
                                      {{af({Rat(1), Rat(-1)})}, {}, {}}),
        "vertex root changes sign on the carrier");
  }
  SUBCASE("roots must lie in the lattice") {
    MetricSpace line(QMat{{Rat(1)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(line, {{Rat(0)}}, Lattice::standard(1),
                                      {{af({Rat(1, 2)})}}),
        "vertex root lies outside the lattice");
  }
  SUBCASE("coroots must pair integrally with the lattice") {
    MetricSpace line(QMat{{Rat(1)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(line, {{Rat(0)}}, Lattice::standard(1),
                                      {{af({Rat(3)})}}),
        "vertex root coroot is not integral on the lattice");
  }
  SUBCASE("vertex sets must be reflection-closed") {
    MetricSpace cartan(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(cartan, {{Rat(0), Rat(0)}}, z2,
                                      {{af({Rat(1), Rat(0)}), af({Rat(0), Rat(1)})}}),
        "vertex root set is not reflection-closed");
  }
  SUBCASE("vertex sets must be reduced") {
    MetricSpace sp(QMat{{Rat(2)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(sp, {{Rat(0)}}, Lattice::standard(1),
                                      {{af({Rat(1)}), af({Rat(2)})}}),
        "vertex root set is not reduced");
  }
  SUBCASE("vertices must agree on shared faces") {
    QMat segment = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    CHECK_THROWS_AS(
        local_system_from_vertex_data(plane, segment, z2,
                                      {{af({Rat(0), Rat(1)})}, {}}),
        std::invalid_argument);
  }
  SUBCASE("vertex rows must be extreme and counted") {
    MetricSpace line(QMat{{Rat(1)}});
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(line, {{Rat(0)}, {Rat(1)}, {Rat(1, 2)}},
                                      Lattice::standard(1), {{}, {}, {}}),
        "vertex rows must be distinct extreme points");
    CHECK_THROWS_WITH(
        local_system_from_vertex_data(line, {{Rat(0)}, {Rat(1)}}, Lattice::standard(1),
                                      {{}}),
        "one root set per vertex is required");
  }
  SUBCASE("valid data lands on the right faces") {
    // Vertex systems of the standard affine segment on [0, 1].
    MetricSpace line(QMat{{Rat(1)}});
    LocalRootSystem l = local_system_from_vertex_data(
        line, {{Rat(0)}, {Rat(1)}}, Lattice::standard(1),
        {{af({Rat(1)})}, {af({Rat(-1)}, Rat(1))}});
    REQUIRE(l.carrier.face_count() == 3);
    CHECK(l.face_roots[0].size() == 2);  // vertex 0: +/- x
    CHECK(l.face_roots[1].size() == 2);  // vertex 1: +/- (1 - x)
    CHECK(l.face_roots[2].empty());      // nothing vanishes on the whole segment
  }
}

TEST_CASE("restriction to the full fundamental simplex glues back") {
  check_glue_recovers(build_from_type({TypeSpec{"A", 1, 1}}));
  check_glue_recovers(build_from_type({TypeSpec{"A", 2, 1}}));
  check_glue_recovers(build_from_type({TypeSpec{"C", 2, 1}}));
  check_glue_recovers(build_from_type({TypeSpec{"G", 2, 1}}));
  check_glue_recovers(build_from_type({TypeSpec{"A", 2, 2}}));
  check_glue_recovers(build_from_type({TypeSpec{"A", 4, 2}}));
  check_glue_recovers(build_from_type({TypeSpec{"D", 3, 2}}));
  check_glue_recovers(build_from_type({TypeSpec{"C", 3, 1}}));
  check_glue_recovers(
      build_from_type({TypeSpec{"A", 1, 1}, TypeSpec{"A", 2, 2}}));
}

TEST_CASE("restriction to a vertex of a finite chamber") {
  // At a single point the glued system may pick a different chamber, but it
  // generates the same set of roots and the same type.
  MetricSpace plane(q_identity(2));
  Lattice z2 = Lattice::standard(2);
  AffineRootSystem rs(plane, {af({Rat(1), Rat(-1)}), af({Rat(0), Rat(2)})}, z2);
  LocalRootSystem l = restrict_to_polytope(rs, {{Rat(0), Rat(0)}});
  GlueResult g = glue_local_system(l);
  REQUIRE_MESSAGE(g.system.has_value(), g.failure);
  CHECK(typeset(*g.system) == std::vector<std::string>{"C2"});
  CHECK(reflection_closure(plane, g.system->simple_roots()) == l.face_roots[0]);
}

TEST_CASE("restriction to partial carriers") {
  AffineRootSystem rs = build_from_type({TypeSpec{"A", 1, 1}});

  SUBCASE("a segment touching one wall glues to the finite stabilizer") {
    LocalRootSystem l = restrict_to_polytope(rs, {{Rat(0)}, {Rat(1, 2)}});
    GlueResult g = glue_local_system(l);
    REQUIRE_MESSAGE(g.system.has_value(), g.failure);
    CHECK(typeset(*g.system) == std::vector<std::string>{"A1"});
    CHECK(g.system->simple_roots().size() == 1);
  }
  SUBCASE("an interior segment glues to the trivial system") {
    LocalRootSystem l = restrict_to_polytope(rs, {{Rat(1, 4)}, {Rat(1, 3)}});
    GlueResult g = glue_local_system(l);
    REQUIRE_MESSAGE(g.system.has_value(), g.failure);
    CHECK(g.system->components().empty());
    CHECK(g.system->simple_roots().empty());
  }
  SUBCASE("an alcove edge can regenerate the whole system") {
    AffineRootSystem c2 = build_from_type({TypeSpec{"C", 2, 1}});
    QMat verts = alcove_vertices(c2);
    REQUIRE(verts.size() == 3);
    LocalRootSystem l = restrict_to_polytope(c2, {verts[0], verts[1]});
    GlueResult g = glue_local_system(l);
    REQUIRE_MESSAGE(g.system.has_value(), g.failure);
    CHECK(sorted_fns(g.system->simple_roots()) == sorted_fns(c2.simple_roots()));
  }
  SUBCASE("vertices must lie in the fundamental alcove") {
    CHECK_THROWS_AS(restrict_to_polytope(rs, {{Rat(2)}}), std::invalid_argument);
  }
}

TEST_CASE("gluing cyclic-pair data on the fundamental simplex") {
  // Vertex data on the alcove of the cyclic affine system: at the vertex
  // where all simples but alpha_k vanish, attach the closure of the sums
  // alpha_j + alpha_{j+1} (indices mod n) that avoid alpha_k.  The glued
  // system has all n sums as simple roots; its type alternates with the
  // parity of n.
  auto run = [](int n, const std::vector<std::string>& types) {
    CAPTURE(n);
    AffineRootSystem ambient = build_from_type({TypeSpec{"A", n - 1, 1}});
    const auto& simples = ambient.simple_roots();
    auto sigma = [&](int j) {
      const AffineFunctional& a = simples[j % n];
      const AffineFunctional& b = simples[(j + 1) % n];
      return AffineFunctional{q_add(a.gradient, b.gradient), a.constant + b.constant};
    };
    QMat verts = alcove_vertices(ambient);
    REQUIRE(verts.size() == size_t(n));
    std::vector<std::vector<AffineFunctional>> data(n);
    for (int k = 0; k < n; ++k) {
      std::vector<AffineFunctional> gens;
      for (int j = 0; j < n; ++j) {
        if (j != k && (j + 1) % n != k) gens.push_back(sigma(j));
      }
      data[k] = reflection_closure(ambient.space(), gens);
    }
    LocalRootSystem l =
        local_system_from_vertex_data(ambient.space(), verts, ambient.lambda(), data);
    GlueResult g = glue_local_system(l);
    REQUIRE_MESSAGE(g.system.has_value(), g.failure);
    std::vector<AffineFunctional> expect;
    for (int j = 0; j < n; ++j) expect.push_back(sigma(j));
    CHECK(sorted_fns(g.system->simple_roots()) == sorted_fns(expect));
    CHECK(typeset(*g.system) == types);
  };
  run(3, {"A2~1"});
  run(4, {"A1~1", "A1~1"});
  run(5, {"A4~1"});
  run(6, {"A2~1", "A2~1"});
}

TEST_CASE("gluing failures") {
  MetricSpace plane(q_identity(2));
  Lattice z2 = Lattice::standard(2);

  SUBCASE("faces disagreeing on a wall scale") {
    // Hand-built data (bypassing vertex validation): one endpoint carries
    // the primitive wall, the other its double.
    LocalRootSystem l{plane, Polytope::from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}),
                      z2, {}};
    l.face_roots.resize(3);
    l.face_roots[0] = {af({Rat(0), Rat(1)}), af({Rat(0), Rat(-1)})};
    l.face_roots[1] = {af({Rat(0), Rat(2)}), af({Rat(0), Rat(-2)})};
    GlueResult g = glue_local_system(l);
    CHECK(!g.system.has_value());
    CHECK(g.failure == "faces disagree on the scale of a shared wall");
    CHECK(g.face == -1);
  }
  SUBCASE("an acutely paired pool") {
    LocalRootSystem l{plane, Polytope::from_vertices({{Rat(0), Rat(0)}}), z2, {}};
    l.face_roots = {{af({Rat(1), Rat(0)}), af({Rat(-1), Rat(0)}),
                     af({Rat(1), Rat(1)}), af({Rat(-1), Rat(-1)})}};
    GlueResult g = glue_local_system(l);
    CHECK(!g.system.has_value());
    CHECK(g.failure == "simple-system test failed: pair closes an acute angle");
  }
  SUBCASE("a pool with a non-integral pairing") {
    // Pairings (-2, -1/2): the angle test passes, the constructor rejects.
    MetricSpace skew(QMat{{Rat(4), Rat(-1)}, {Rat(-1), Rat(1)}});
    LocalRootSystem l{skew, Polytope::from_vertices({{Rat(0), Rat(0)}}), z2, {}};
    l.face_roots = {{af({Rat(1), Rat(0)}), af({Rat(-1), Rat(0)}),
                     af({Rat(0), Rat(1)}), af({Rat(0), Rat(-1)})}};
    GlueResult g = glue_local_system(l);
    CHECK(!g.system.has_value());
    CHECK(g.failure.substr(0, 28) == "glued system is not integral");
  }
  SUBCASE("a gradient at the wrong lattice scale") {
    MetricSpace line(QMat{{Rat(1)}});
    LocalRootSystem l{line, Polytope::from_vertices({{Rat(0)}}), Lattice::standard(1), {}};
    l.face_roots = {{af({Rat(3)}), af({Rat(-3)})}};
    GlueResult g = glue_local_system(l);
    CHECK(!g.system.has_value());
    CHECK(g.failure == "simple root is neither primitive nor twice primitive in the lattice");
  }
  SUBCASE("declared data missing part of the glued stabilizer") {
    MetricSpace cartan(QMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
    LocalRootSystem l{cartan, Polytope::from_vertices({{Rat(0), Rat(0)}}), z2, {}};
    l.face_roots = {{af({Rat(1), Rat(0)}), af({Rat(-1), Rat(0)}),
                     af({Rat(0), Rat(1)}), af({Rat(0), Rat(-1)})}};
    GlueResult g = glue_local_system(l);
    CHECK(!g.system.has_value());
    CHECK(g.failure == "glued system disagrees with the data on a face");
    CHECK(g.face == 0);
  }
}
