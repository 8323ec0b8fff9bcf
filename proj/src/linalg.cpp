#include "qham/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace qham {

namespace {

int ncols_of(const IMat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }
int ncols_of(const QMat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

void check_rect(const IMat& a) {
  for (const auto& r : a) {
    if (static_cast<int>(r.size()) != ncols_of(a)) {
      throw std::invalid_argument("ragged integer matrix");
    }
  }
}

void row_sub_mul(IVec& dst, const IVec& src, Int q) {
  for (size_t j = 0; j < dst.size(); ++j) {
    dst[j] = checked_sub(dst[j], checked_mul(q, src[j]));
  }
}

void row_negate(IVec& r) {
  for (auto& x : r) x = checked_sub(0, x);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> q_rref(QMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i) {
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rat inv = a[r][c].inv();
    for (int j = c; j < n; ++j) a[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IMat i_identity(int n) {
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

QMat q_identity(int n) {
  QMat a(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) a[i][i] = Rat(1);
  return a;
}

QMat to_q(const IMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = to_q(a[i]);
  return q;
}

QVec to_q(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

std::pair<IVec, Int> clear_denominators(const QVec& v) {
  Int d = 1;
  for (const auto& x : v) d = lcm_ll(d, x.den());
  if (d == 0) d = 1;
  IVec m(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    m[i] = checked_mul(v[i].num(), d / v[i].den());
  }
  return {m, d};
}

std::pair<IMat, Int> clear_denominators(const QMat& a) {
  Int d = 1;
  for (const auto& row : a)
    for (const auto& x : row) d = lcm_ll(d, x.den());
  if (d == 0) d = 1;
  IMat m(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    m[i].resize(a[i].size());
    for (size_t j = 0; j < a[i].size(); ++j) {
      m[i][j] = checked_mul(a[i][j].num(), d / a[i][j].den());
    }
  }
  return {m, d};
}

IMat i_transpose(const IMat& a) {
  int m = static_cast<int>(a.size()), n = ncols_of(a);
  IMat t(n, IVec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

QMat q_transpose(const QMat& a) {
  int m = static_cast<int>(a.size()), n = ncols_of(a);
  QMat t(n, QVec(m, Rat(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

IMat i_mul(const IMat& a, const IMat& b) {
  int m = static_cast<int>(a.size()), k = ncols_of(a), n = ncols_of(b);
  if (k != static_cast<int>(b.size())) {
    throw std::invalid_argument("i_mul shape mismatch");
  }
  IMat c(m, IVec(n, 0));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < n; ++j) {
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][t], b[t][j]));
      }
    }
  return c;
}

QMat q_mul(const QMat& a, const QMat& b) {
  int m = static_cast<int>(a.size()), k = ncols_of(a), n = ncols_of(b);
  if (k != static_cast<int>(b.size())) {
    throw std::invalid_argument("q_mul shape mismatch");
  }
  QMat c(m, QVec(n, Rat(0)));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

QVec q_matvec(const QMat& a, const QVec& x) {
  QVec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("q_matvec shape");
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

QVec q_vecmat(const QVec& x, const QMat& a) {
  if (x.size() != a.size()) throw std::invalid_argument("q_vecmat shape");
  QVec y(ncols_of(a), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) y[j] += x[i] * a[i][j];
  }
  return y;
}

IVec i_vecmat(const IVec& x, const IMat& a) {
  if (x.size() != a.size()) throw std::invalid_argument("i_vecmat shape");
  IVec y(ncols_of(a), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      y[j] = checked_add(y[j], checked_mul(x[i], a[i][j]));
    }
  }
  return y;
}

Rat q_dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("q_dot shape");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec q_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("q_add shape");
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

QVec q_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("q_sub shape");
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

QVec q_scale(const Rat& c, const QVec& v) {
  QVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

QMat q_scale_mat(const Rat& c, const QMat& a) {
  QMat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(q_scale(c, row));
  return out;
}

bool q_is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

int q_rank(QMat a) { return static_cast<int>(q_rref(a).size()); }

Rat q_det(QMat a) {
  int n = static_cast<int>(a.size());
  if (n != ncols_of(a)) throw std::invalid_argument("q_det of non-square matrix");
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rat inv = a[c][c].inv();
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Rat f = a[i][c] * inv;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

QMat q_inverse(QMat a) {
  int n = static_cast<int>(a.size());
  if (n != ncols_of(a)) throw std::invalid_argument("q_inverse of non-square matrix");
  for (int i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rat(0));
    a[i][n + i] = Rat(1);
  }
  auto pivots = q_rref(a);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) {
    throw std::domain_error("q_inverse of singular matrix");
  }
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::optional<QVec> q_solve_right(const QMat& a, const QVec& b) {
  int m = static_cast<int>(a.size());
  int n = ncols_of(a);
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("q_solve_right shape");
  QMat aug(m, QVec(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = q_rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
  QVec x(n, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return x;
}

std::optional<QVec> q_solve_left(const QMat& a, const QVec& b) {
  return q_solve_right(q_transpose(a), b);
}

QMat q_left_nullspace(const QMat& a) {
  // x * a = 0  <=>  a^T x^T = 0; reduce a^T and read off free directions.
  QMat t = q_transpose(a);
  int n = static_cast<int>(a.size());  // unknowns
  auto pivots = q_rref(t);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec x(n, Rat(0));
    x[f] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -t[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

HnfResult hnf_rows(const IMat& a) {
  check_rect(a);
  int m = static_cast<int>(a.size());
  int n = ncols_of(a);
  HnfResult res;
  res.u = i_identity(m);
  IMat w = a;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // Euclidean elimination in column c over rows >= r.
    while (true) {
      int p = -1;
      for (int i = r; i < m; ++i) {
        if (w[i][c] != 0 && (p < 0 || std::llabs(w[i][c]) < std::llabs(w[p][c]))) {
          p = i;
        }
      }
      if (p < 0) break;
      std::swap(w[p], w[r]);
      std::swap(res.u[p], res.u[r]);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (w[i][c] == 0) continue;
        Int q = w[i][c] / w[r][c];
        if (q != 0) {
          row_sub_mul(w[i], w[r], q);
          row_sub_mul(res.u[i], res.u[r], q);
        }
        if (w[i][c] != 0) clean = false;
      }
      if (clean) {
        if (w[r][c] < 0) {
          row_negate(w[r]);
          row_negate(res.u[r]);
        }
        for (int i = 0; i < r; ++i) {
          Int q = floor_div(w[i][c], w[r][c]);
          if (q != 0) {
            row_sub_mul(w[i], w[r], q);
            row_sub_mul(res.u[i], res.u[r], q);
          }
        }
        ++r;
        break;
      }
    }
  }
  res.rank = r;
  res.h.assign(w.begin(), w.begin() + r);
  return res;
}

IMat row_lattice_hnf(const IMat& a) { return hnf_rows(a).h; }

IMat left_kernel(const IMat& a) {
  int m = static_cast<int>(a.size());
  if (m == 0) return {};
  HnfResult res = hnf_rows(a);
  IMat ker(res.u.begin() + res.rank, res.u.end());
  if (ker.empty()) return {};
  return row_lattice_hnf(ker);
}

IMat preimage_lattice(const IMat& a, const IMat& rels) {
  int k = static_cast<int>(a.size());
  if (k == 0) return {};
  int n = ncols_of(a);
  if (n == 0) return i_identity(k);
  IMat stacked = a;
  for (const auto& row : rels) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("preimage_lattice shape mismatch");
    }
    stacked.push_back(row);
  }
  IMat ker = left_kernel(stacked);
  IMat proj;
  for (const auto& row : ker) {
    proj.emplace_back(row.begin(), row.begin() + k);
  }
  if (proj.empty()) return {};
  return row_lattice_hnf(proj);
}

std::optional<IVec> solve_in_hnf_basis(const IMat& h, const IVec& b) {
  IVec residual = b;
  IVec x(h.size(), 0);
  for (size_t i = 0; i < h.size(); ++i) {
    int pivot_col = -1;
    for (size_t j = 0; j < h[i].size(); ++j) {
      if (h[i][j] != 0) {
        pivot_col = static_cast<int>(j);
        break;
      }
    }
    if (pivot_col < 0) continue;
    Int num = residual[pivot_col];
    Int den = h[i][pivot_col];
    if (num % den != 0) return std::nullopt;
    x[i] = num / den;
    if (x[i] != 0) row_sub_mul(residual, h[i], x[i]);
  }
  for (Int v : residual) {
    if (v != 0) return std::nullopt;
  }
  return x;
}

std::optional<IVec> i_solve_left(const IMat& a, const IVec& b) {
  if (a.empty()) {
    for (Int v : b)
      if (v != 0) return std::nullopt;
    return IVec{};
  }
  HnfResult res = hnf_rows(a);
  auto y = solve_in_hnf_basis(res.h, b);
  if (!y) return std::nullopt;
  IVec x(a.size(), 0);
  for (int i = 0; i < res.rank; ++i) {
    if ((*y)[i] == 0) continue;
    for (size_t j = 0; j < x.size(); ++j) {
      x[j] = checked_add(x[j], checked_mul((*y)[i], res.u[i][j]));
    }
  }
  return x;
}

// ---------------------------------------------------------------------------

SnfResult smith_normal_form(const IMat& a) {
  check_rect(a);
  int m = static_cast<int>(a.size());
  int n = ncols_of(a);
  SnfResult res;
  res.u = i_identity(m);
  res.v = i_identity(n);
  IMat w = a;

  auto col_sub_mul = [&](int dst, int src, Int q) {
    for (int i = 0; i < m; ++i) w[i][dst] = checked_sub(w[i][dst], checked_mul(q, w[i][src]));
    for (int i = 0; i < n; ++i) res.v[i][dst] = checked_sub(res.v[i][dst], checked_mul(q, res.v[i][src]));
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(w[r][i], w[r][j]);
    for (int r = 0; r < n; ++r) std::swap(res.v[r][i], res.v[r][j]);
  };
  auto col_negate = [&](int j) {
    for (int r = 0; r < m; ++r) w[r][j] = checked_sub(0, w[r][j]);
    for (int r = 0; r < n; ++r) res.v[r][j] = checked_sub(0, res.v[r][j]);
  };

  int t = 0;
  while (t < std::min(m, n)) {
    // Locate a pivot of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (w[i][j] != 0 && (pi < 0 || std::llabs(w[i][j]) < std::llabs(w[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(w[pi], w[t]);
    std::swap(res.u[pi], res.u[t]);
    if (pj != t) col_swap(pj, t);

    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (w[i][t] == 0) continue;
        Int q = w[i][t] / w[t][t];
        if (q != 0) {
          row_sub_mul(w[i], w[t], q);
          row_sub_mul(res.u[i], res.u[t], q);
        }
        if (w[i][t] != 0) {
          std::swap(w[i], w[t]);
          std::swap(res.u[i], res.u[t]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (w[t][j] == 0) continue;
        Int q = w[t][j] / w[t][t];
        if (q != 0) col_sub_mul(j, t, q);
        if (w[t][j] != 0) {
          col_swap(j, t);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      bool fixed = true;
      for (int i = t + 1; i < m && fixed; ++i)
        for (int j = t + 1; j < n && fixed; ++j) {
          if (w[i][j] % w[t][t] != 0) {
            // Fold row i into row t and re-run the clearing loop.
            for (int c = 0; c < n; ++c) w[t][c] = checked_add(w[t][c], w[i][c]);
            for (int c = 0; c < m; ++c) res.u[t][c] = checked_add(res.u[t][c], res.u[i][c]);
            fixed = false;
          }
        }
      if (fixed) break;
    }
    if (w[t][t] < 0) col_negate(t);
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diag.push_back(w[i][i]);
  return res;
}

// ---------------------------------------------------------------------------

Int AbelianGroup::torsion_order() const {
  Int p = 1;
  for (Int d : torsion) p = checked_mul(p, d);
  return p;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) {
    append("Z");
  } else if (free_rank > 1) {
    append("Z^" + std::to_string(free_rank));
  }
  for (Int d : torsion) append("Z/" + std::to_string(d));
  return s;
}

AbelianGroup quotient_group(int n, const IMat& rels) {
  for (const auto& r : rels) {
    if (static_cast<int>(r.size()) != n) {
      throw std::invalid_argument("quotient_group relation length mismatch");
    }
  }
  AbelianGroup g;
  if (rels.empty()) {
    g.free_rank = n;
    return g;
  }
  SnfResult snf = smith_normal_form(rels);
  g.free_rank = n - snf.rank;
  for (Int d : snf.diag) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace qham
