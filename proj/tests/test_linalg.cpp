#include "doctest.h"

#include <random>

#include "qham/linalg.hpp"

using namespace qham;

namespace {

// Pads h with zero rows up to nrows, for comparing u*a against it.
IMat pad_zero_rows(IMat h, int nrows, int ncols) {
  while (static_cast<int>(h.size()) < nrows) h.push_back(IVec(ncols, 0));
  return h;
}

bool is_canonical_hnf(const IMat& h) {
  int prev_pivot = -1;
  for (const auto& row : h) {
    int p = -1;
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) {
        p = static_cast<int>(j);
        break;
      }
    }
    if (p < 0 || p <= prev_pivot) return false;  // zero row or non-echelon
    if (row[p] <= 0) return false;
    prev_pivot = p;
  }
  // Entries above each pivot reduced into [0, pivot).
  for (size_t i = 0; i < h.size(); ++i) {
    int p = 0;
    while (h[i][p] == 0) ++p;
    for (size_t k = 0; k < i; ++k) {
      if (h[k][p] < 0 || h[k][p] >= h[i][p]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rational elimination basics") {
  QMat a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  CHECK(q_det(a) == Rat(-2));
  CHECK(q_rank(a) == 2);
  CHECK(q_rank(QMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);

  QMat b = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  QMat binv = q_inverse(b);
  CHECK(binv == QMat{{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}});
  CHECK(q_mul(b, binv) == q_identity(2));
  CHECK_THROWS_AS(q_inverse(QMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}),
                  std::domain_error);
}

TEST_CASE("rational solve, both sides") {
  QMat a = {{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  auto xr = q_solve_right(a, {Rat(5), Rat(11)});
  REQUIRE(xr.has_value());
  CHECK(*xr == QVec{Rat(1), Rat(2)});

  auto xl = q_solve_left(a, {Rat(1), Rat(0)});
  REQUIRE(xl.has_value());
  CHECK(q_vecmat(*xl, a) == QVec{Rat(1), Rat(0)});
  CHECK(*xl == QVec{Rat(-2), Rat(1)});

  // Inconsistent system.
  QMat s = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_FALSE(q_solve_right(s, {Rat(1), Rat(3)}).has_value());
  // Underdetermined: any solution is acceptable, must verify.
  auto xu = q_solve_right(QMat{{Rat(1), Rat(1)}}, {Rat(3)});
  REQUIRE(xu.has_value());
  CHECK((*xu)[0] + (*xu)[1] == Rat(3));
}

TEST_CASE("rational left nullspace") {
  QMat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  QMat ns = q_left_nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(q_is_zero(q_vecmat(ns[0], a)));
  CHECK(ns[0] == QVec{Rat(-2), Rat(1)});
  CHECK(q_left_nullspace(q_identity(3)).empty());
}

TEST_CASE("hermite form: frozen oracles") {
  // Lattice Z(1,2) + Z(3,4) has index 2 in Z^2; canonical basis (1,0),(0,2).
  auto r = hnf_rows({{1, 2}, {3, 4}});
  CHECK(r.rank == 2);
  CHECK(r.h == IMat{{1, 0}, {0, 2}});
  CHECK(i_mul(r.u, {{1, 2}, {3, 4}}) == pad_zero_rows(r.h, 2, 2));

  // Dependent rows collapse.
  CHECK(row_lattice_hnf({{4, 6}, {2, 3}}) == IMat{{2, 3}});
  // Order of generators does not matter.
  CHECK(row_lattice_hnf({{0, 3}, {2, 0}}) == IMat{{2, 0}, {0, 3}});
  CHECK(row_lattice_hnf({{2, 0}, {0, 3}}) == IMat{{2, 0}, {0, 3}});
}

TEST_CASE("hermite form: randomized properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    IMat a(m, IVec(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    auto r = hnf_rows(a);
    CHECK(is_canonical_hnf(r.h));
    CHECK(i_mul(r.u, a) == pad_zero_rows(r.h, m, n));
    CHECK(q_det(to_q(r.u)).abs() == Rat(1));
    // Canonical form is a lattice invariant: permuting generators or adding
    // one generator to another must not change it.
    IMat b = a;
    std::shuffle(b.begin(), b.end(), rng);
    if (b.size() >= 2) {
      for (size_t j = 0; j < b[0].size(); ++j) {
        b[0][j] = checked_add(b[0][j], b[1][j]);
      }
    }
    CHECK(row_lattice_hnf(b) == r.h);
  }
}

TEST_CASE("integer kernels") {
  CHECK(left_kernel({{1, 2}, {2, 4}}) == IMat{{2, -1}});
  CHECK(left_kernel({{1, 0}, {0, 1}}).empty());
  CHECK(left_kernel({{2, 4, 6}}).empty());
  // Kernel vectors of unimodular-transform origin are saturated: x/g not
  // integral for g>1 unless x itself is in the kernel basis span.
  IMat k = left_kernel({{2, 1}, {4, 2}, {6, 3}});
  REQUIRE(k.size() == 2);
  for (const auto& row : k) {
    CHECK(i_vecmat(row, {{2, 1}, {4, 2}, {6, 3}}) == IVec{0, 0});
  }
}

TEST_CASE("preimage lattices") {
  // Identity map, target relations 2Z x 3Z.
  CHECK(preimage_lattice(i_identity(2), {{2, 0}, {0, 3}}) ==
        IMat{{2, 0}, {0, 3}});
  // Diagonal embedding x -> (x, x) into Z^2 mod 2Z^2: preimage is 2Z.
  CHECK(preimage_lattice({{1, 1}}, {{2, 0}, {0, 2}}) == IMat{{2}});
  // Empty relations reduce to the kernel.
  CHECK(preimage_lattice({{3}}, {}).empty());
  CHECK(preimage_lattice({{0}}, {}) == IMat{{1}});
}

TEST_CASE("integer solve") {
  auto x = i_solve_left({{1, 2}, {3, 4}}, {1, 0});
  REQUIRE(x.has_value());
  CHECK(*x == IVec{-2, 1});
  CHECK_FALSE(i_solve_left({{1, 2}, {3, 4}}, {1, 1}).has_value());

  auto y = solve_in_hnf_basis({{1, 0}, {0, 2}}, {3, 4});
  REQUIRE(y.has_value());
  CHECK(*y == IVec{3, 2});
  CHECK_FALSE(solve_in_hnf_basis({{1, 0}, {0, 2}}, {3, 3}).has_value());
}

TEST_CASE("smith form: frozen oracles") {
  // diag(2,3) has invariant factors (1,6).
  auto s = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(s.diag == std::vector<Int>{1, 6});
  CHECK(s.rank == 2);

  auto s2 = smith_normal_form({{2, 4}, {4, 8}});
  CHECK(s2.diag == std::vector<Int>{2});
  CHECK(s2.rank == 1);
}

TEST_CASE("smith form: randomized properties") {
  std::mt19937 rng(54321);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    IMat a(m, IVec(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    auto s = smith_normal_form(a);
    CHECK(q_det(to_q(s.u)).abs() == Rat(1));
    CHECK(q_det(to_q(s.v)).abs() == Rat(1));
    IMat d = i_mul(i_mul(s.u, a), s.v);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        Int want = (i == j && i < s.rank) ? s.diag[i] : 0;
        CHECK(d[i][j] == want);
      }
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
      CHECK(s.diag[i] > 0);
      CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
  }
}

TEST_CASE("quotient groups") {
  CHECK(quotient_group(2, {{2, 0}, {0, 3}}) == AbelianGroup{0, {6}});
  CHECK(quotient_group(2, {{2, 0}}) == AbelianGroup{1, {2}});
  CHECK(quotient_group(3, {}) == AbelianGroup{3, {}});
  CHECK(quotient_group(1, {{1}}) == AbelianGroup{0, {}});
  CHECK(quotient_group(2, {{2, 0}, {0, 2}}) == AbelianGroup{0, {2, 2}});
  CHECK(quotient_group(2, {{1, 1}, {1, -1}}) == AbelianGroup{0, {2}});

  CHECK(AbelianGroup{0, {}}.str() == "0");
  CHECK(AbelianGroup{1, {}}.str() == "Z");
  CHECK(AbelianGroup{2, {2, 6}}.str() == "Z^2 + Z/2 + Z/6");
  CHECK(AbelianGroup{0, {2, 2}}.torsion_order() == 4);
}
