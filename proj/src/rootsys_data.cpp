#include "qham/rootsys_data.hpp"

#include <stdexcept>

#include "qham/linalg.hpp"

namespace qham {

namespace {

// Dense zero matrix helpers.
QMat q_zero(int rows, int cols) { return QMat(rows, QVec(cols)); }

QVec unit(int dim, int i, Rat c = Rat(1)) {
  QVec v(dim);
  v[i] = c;
  return v;
}

// Builds coeff rows from gradient rows: coeff = gram * gradient.
QMat coeffs_from_gradients(const QMat& gram, const QMat& gradients) {
  QMat out;
  for (const auto& g : gradients) out.push_back(q_matvec(gram, g));
  return out;
}

// Cartan matrices of the simply-laced E charts (Bourbaki numbering: node 2
// hangs off node 4, the chain is 1-3-4-5-...).
QMat e_cartan(int n) {
  std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
  if (n >= 6) edges.push_back({5, 6});
  if (n >= 7) edges.push_back({6, 7});
  if (n >= 8) edges.push_back({7, 8});
  QMat g = q_zero(n, n);
  for (int i = 0; i < n; ++i) g[i][i] = Rat(2);
  for (auto [a, b] : edges) {
    if (a <= n && b <= n) {
      g[a - 1][b - 1] = Rat(-1);
      g[b - 1][a - 1] = Rat(-1);
    }
  }
  return g;
}

// Highest-root coefficients of E_n in the same numbering.
QVec e_theta(int n) {
  if (n == 6) return {Rat(1), Rat(2), Rat(2), Rat(3), Rat(2), Rat(1)};
  if (n == 7) return {Rat(2), Rat(2), Rat(3), Rat(4), Rat(3), Rat(2), Rat(1)};
  return {Rat(2), Rat(3), Rat(4), Rat(6), Rat(5), Rat(4), Rat(3), Rat(2)};
}

QMat g2_gram() {
  // Root-basis chart with alpha_1 short: entries <alpha_i, alpha_j>.
  return {{Rat(2, 3), Rat(-1)}, {Rat(-1), Rat(2)}};
}

}  // namespace

bool valid_type_spec(const TypeSpec& t) {
  const std::string& f = t.family;
  int n = t.rank;
  int r = t.twist;
  if (!t.scale.is_positive()) return false;
  if (!t.affine && r != 1) return false;  // twists are features of affine diagrams
  if (f == "A") {
    if (r == 1) return n >= 1;
    if (r == 2) return (n >= 2 && n % 2 == 0) || (n >= 5 && n % 2 == 1);
    return false;
  }
  if (f == "B") return r == 1 && n >= 2;
  if (f == "C") return r == 1 && n >= 2;
  if (f == "D") {
    if (r == 1) return n >= 4;
    // The two-twist series starts at three nodes (the fold of A_3); its
    // rank-2 member is the only three-node diagram with inward double
    // edges at both ends, so classification needs it.
    if (r == 2) return n >= 3;
    if (r == 3) return n == 4;
    return false;
  }
  if (f == "E") {
    if (r == 1) return n >= 6 && n <= 8;
    if (r == 2) return n == 6;
    return false;
  }
  if (f == "F") return r == 1 && n == 4;
  if (f == "G") return r == 1 && n == 2;
  return false;
}

std::string type_name(const TypeSpec& t) {
  std::string s = t.family + std::to_string(t.rank);
  if (t.affine) s += "~" + std::to_string(t.twist);
  return s;
}

SeedData seed_data(const TypeSpec& t) {
  if (!valid_type_spec(t)) {
    throw std::invalid_argument("unsupported type " + type_name(t));
  }
  const std::string& f = t.family;
  const int n = t.rank;
  const int r = t.twist;

  SeedData s;
  auto chain = [&](int dim, int from, int to) {
    // alpha_i = u_i - u_{i+1} for i in [from, to].
    for (int i = from; i <= to; ++i) {
      QVec row(dim);
      row[i - 1] = Rat(1);
      row[i] = Rat(-1);
      s.coeff_rows.push_back(row);
      s.constants.push_back(Rat(0));
    }
  };

  if (f == "A" && r == 1 && n == 1) {
    // Chart: the line with form <x,y> = 2xy; alpha_1(x) = x, alpha_0(x) = 1-x.
    s.dim = 1;
    s.gram = {{Rat(2)}};
    s.coeff_rows = {{Rat(-1)}, {Rat(1)}};
    s.constants = {Rat(1), Rat(0)};
  } else if (f == "A" && r == 1) {
    // Chart: u_i = x_i for i <= n on the sum-zero hyperplane of R^{n+1},
    // x_{n+1} = -(u_1+...+u_n); Gram matrix I + J.
    s.dim = n;
    s.gram = q_zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.gram[i][j] = Rat(i == j ? 2 : 1);
    {
      QVec row(n, Rat(-1));
      row[0] = Rat(-2);
      s.coeff_rows.push_back(row);  // alpha_0 = 1 + x_{n+1} - x_1
      s.constants.push_back(Rat(1));
    }
    chain(n, 1, n - 1);
    {
      QVec row(n, Rat(1));
      row[n - 1] = Rat(2);
      s.coeff_rows.push_back(row);  // alpha_n = x_n - x_{n+1}
      s.constants.push_back(Rat(0));
    }
  } else if (f == "B") {
    s.dim = n;
    s.gram = q_identity(n);
    s.coeff_rows.push_back(q_add(unit(n, 0, Rat(-1)), unit(n, 1, Rat(-1))));
    s.constants.push_back(Rat(1));  // alpha_0 = 1 - u_1 - u_2
    chain(n, 1, n - 1);
    s.coeff_rows.push_back(unit(n, n - 1));
    s.constants.push_back(Rat(0));  // alpha_n = u_n
  } else if (f == "C") {
    s.dim = n;
    s.gram = q_identity(n);
    s.coeff_rows.push_back(unit(n, 0, Rat(-2)));
    s.constants.push_back(Rat(1));  // alpha_0 = 1 - 2u_1
    chain(n, 1, n - 1);
    s.coeff_rows.push_back(unit(n, n - 1, Rat(2)));
    s.constants.push_back(Rat(0));  // alpha_n = 2u_n
  } else if (f == "D" && r == 1) {
    s.dim = n;
    s.gram = q_identity(n);
    s.coeff_rows.push_back(q_add(unit(n, 0, Rat(-1)), unit(n, 1, Rat(-1))));
    s.constants.push_back(Rat(1));  // alpha_0 = 1 - u_1 - u_2
    chain(n, 1, n - 1);
    s.coeff_rows.push_back(q_add(unit(n, n - 2), unit(n, n - 1)));
    s.constants.push_back(Rat(0));  // alpha_n = u_{n-1} + u_n
  } else if (f == "E" && r == 1) {
    // Root-basis chart: Gram = Cartan matrix, gradient of alpha_i = e_i.
    s.dim = n;
    s.gram = e_cartan(n);
    QMat gradients;
    gradients.push_back(q_scale(Rat(-1), e_theta(n)));
    for (int i = 0; i < n; ++i) gradients.push_back(unit(n, i));
    s.coeff_rows = coeffs_from_gradients(s.gram, gradients);
    s.constants = QVec(n + 1);
    s.constants[0] = Rat(1);
  } else if (f == "F") {
    s.dim = 4;
    s.gram = q_identity(4);
    s.coeff_rows = {
        {Rat(-1), Rat(-1), Rat(0), Rat(0)},                  // alpha_0 = 1-u_1-u_2
        {Rat(0), Rat(1), Rat(-1), Rat(0)},                   // u_2 - u_3
        {Rat(0), Rat(0), Rat(1), Rat(-1)},                   // u_3 - u_4
        {Rat(0), Rat(0), Rat(0), Rat(1)},                    // u_4
        {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};    // (u_1-u_2-u_3-u_4)/2
    s.constants = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
  } else if (f == "G") {
    s.dim = 2;
    s.gram = g2_gram();
    QMat gradients = {{Rat(-3), Rat(-2)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    s.coeff_rows = coeffs_from_gradients(s.gram, gradients);
    s.constants = {Rat(1), Rat(0), Rat(0)};
  } else if (f == "A" && r == 2 && n % 2 == 0) {
    // Rank subscript 2m; chart t_1..t_m with form 2I.
    const int m = n / 2;
    s.dim = m;
    s.gram = q_scale_mat(Rat(2), q_identity(m));
    s.coeff_rows.push_back(unit(m, 0, Rat(-2)));
    s.constants.push_back(Rat(1));  // alpha_0 = 1 - 2t_1
    chain(m, 1, m - 1);
    s.coeff_rows.push_back(unit(m, m - 1));
    s.constants.push_back(Rat(0));  // alpha_m = t_m
  } else if (f == "A" && r == 2) {
    // Rank subscript 2l-1 (l >= 3); chart t_1..t_l with form 2I.
    const int l = (n + 1) / 2;
    s.dim = l;
    s.gram = q_scale_mat(Rat(2), q_identity(l));
    s.coeff_rows.push_back(q_add(unit(l, 0, Rat(-1)), unit(l, 1, Rat(-1))));
    s.constants.push_back(Rat(1, 2));  // alpha_0 = 1/2 - t_1 - t_2
    chain(l, 1, l - 1);
    s.coeff_rows.push_back(unit(l, l - 1, Rat(2)));
    s.constants.push_back(Rat(0));  // alpha_l = 2t_l
  } else if (f == "D" && r == 2) {
    const int l = n - 1;
    s.dim = l;
    s.gram = q_identity(l);
    s.coeff_rows.push_back(unit(l, 0, Rat(-1)));
    s.constants.push_back(Rat(1, 2));  // alpha_0 = 1/2 - t_1
    chain(l, 1, l - 1);
    s.coeff_rows.push_back(unit(l, l - 1));
    s.constants.push_back(Rat(0));  // alpha_l = t_l
  } else if (f == "E" && r == 2) {
    s.dim = 4;
    s.gram = q_identity(4);
    s.coeff_rows = {
        {Rat(-1), Rat(0), Rat(0), Rat(0)},                 // alpha_0 = 1/2 - u_1
        {Rat(0), Rat(1), Rat(-1), Rat(0)},                 // u_2 - u_3
        {Rat(0), Rat(0), Rat(1), Rat(-1)},                 // u_3 - u_4
        {Rat(0), Rat(0), Rat(0), Rat(1)},                  // u_4
        {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};  // (u_1-u_2-u_3-u_4)/2
    s.constants = {Rat(1, 2), Rat(0), Rat(0), Rat(0), Rat(0)};
  } else if (f == "D" && r == 3) {
    s.dim = 2;
    s.gram = g2_gram();
    QMat gradients = {{Rat(-2), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    s.coeff_rows = coeffs_from_gradients(s.gram, gradients);
    s.constants = {Rat(1, 3), Rat(0), Rat(0)};
  } else {
    throw std::invalid_argument("unsupported type " + type_name(t));
  }

  if (!t.affine) {
    // Drop node 0 (its row always comes first in the tables above).
    s.coeff_rows.erase(s.coeff_rows.begin());
    s.constants.erase(s.constants.begin());
  }
  return s;
}

IMat seed_gcm(const TypeSpec& t) {
  SeedData s = seed_data(t);
  MetricSpace sp(s.gram);
  std::vector<QVec> grads;
  for (const auto& row : s.coeff_rows)
    grads.push_back(functional_from_coordinates(sp, row, Rat(0)).gradient);
  const int m = static_cast<int>(grads.size());
  IMat gcm(m, IVec(m));
  for (int i = 0; i < m; ++i) {
    Rat n2 = sp.norm2(grads[i]);
    for (int j = 0; j < m; ++j) {
      Rat c = Rat(2) * sp.inner(grads[j], grads[i]) / n2;
      gcm[j][i] = c.as_integer();
    }
  }
  return gcm;
}

}  // namespace qham
