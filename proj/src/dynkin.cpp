#include "qham/dynkin.hpp"

#include <algorithm>
#include <stdexcept>

#include "qham/linalg.hpp"

namespace qham {

namespace {

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;   // neighbors
  IMat mult;                           // edge multiplicities c_ij * c_ji
};

Graph diagram_graph(const IMat& gcm) {
  Graph g;
  g.n = static_cast<int>(gcm.size());
  g.adj.assign(g.n, {});
  g.mult.assign(g.n, IVec(g.n, 0));
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (gcm[i][j] != 0) {
        Int m = checked_mul(gcm[i][j], gcm[j][i]);
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        g.mult[i][j] = m;
        g.mult[j][i] = m;
      }
    }
  }
  return g;
}

bool is_tree(const Graph& g) {
  int edges = 0;
  for (int i = 0; i < g.n; ++i) edges += static_cast<int>(g.adj[i].size());
  edges /= 2;
  if (edges != g.n - 1) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

// Walks a path graph starting at `start` (a degree-1 node); returns the node
// order along the path.
std::vector<int> walk_path(const Graph& g, int start) {
  std::vector<int> order = {start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : g.adj[cur]) {
      if (w != prev) next = w;
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Walks from `from` away from `center` to the branch tip; returns the branch
// nodes nearest-first.
std::vector<int> walk_branch(const Graph& g, int center, int from) {
  std::vector<int> branch = {from};
  int prev = center, cur = from;
  while (true) {
    int next = -1;
    for (int w : g.adj[cur]) {
      if (w != prev) next = w;
    }
    if (next < 0) break;
    branch.push_back(next);
    prev = cur;
    cur = next;
  }
  return branch;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("not a recognizable diagram: " + what);
}

}  // namespace

IMat cartan_integers(const MetricSpace& space,
                     const std::vector<AffineFunctional>& roots) {
  const int m = static_cast<int>(roots.size());
  std::vector<Rat> norms(m);
  for (int i = 0; i < m; ++i) {
    norms[i] = space.norm2(roots[i].gradient);
    if (norms[i].is_zero()) throw std::invalid_argument("zero gradient");
  }
  IMat c(m, IVec(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      Rat v = Rat(2) * space.inner(roots[i].gradient, roots[j].gradient) / norms[j];
      if (!v.is_integer()) throw std::invalid_argument("non-integer Cartan pairing");
      c[i][j] = v.as_integer();
    }
  }
  return c;
}

std::optional<std::vector<int>> match_gcm(const IMat& a, const IMat& b) {
  const int n = static_cast<int>(b.size());
  if (static_cast<int>(a.size()) != n) return std::nullopt;
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  // Backtracking over seed nodes in order; the diagrams involved are tiny.
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || a[v][v] != b[k][k]) continue;
      bool ok = true;
      for (int k2 = 0; k2 < k && ok; ++k2) {
        int v2 = perm[k2];
        ok = a[v][v2] == b[k][k2] && a[v2][v] == b[k2][k];
      }
      if (!ok) continue;
      perm[k] = v;
      used[v] = 1;
      if (self(self, k + 1)) return true;
      used[v] = 0;
      perm[k] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return perm;
  return std::nullopt;
}

FiniteClassification classify_finite(const MetricSpace& space,
                                     const std::vector<AffineFunctional>& simples) {
  const int m = static_cast<int>(simples.size());
  if (m == 0) fail("empty system");
  IMat gcm = cartan_integers(space, simples);
  Graph g = diagram_graph(gcm);
  if (!is_tree(g)) fail("diagram is not a tree");

  std::vector<Rat> norms(m);
  for (int i = 0; i < m; ++i) norms[i] = space.norm2(simples[i].gradient);

  std::vector<std::pair<int, int>> doubles, triples;
  for (int i = 0; i < m; ++i) {
    for (int j : g.adj[i]) {
      if (j < i) continue;
      if (g.mult[i][j] == 2) doubles.push_back({i, j});
      if (g.mult[i][j] == 3) triples.push_back({i, j});
      if (g.mult[i][j] > 3) fail("edge multiplicity above 3");
    }
  }
  int max_deg = 0;
  for (int i = 0; i < m; ++i) max_deg = std::max(max_deg, static_cast<int>(g.adj[i].size()));

  FiniteClassification out;
  if (m == 1) {
    out = {"A", 1, {0}};
    return out;
  }

  if (!triples.empty()) {
    if (m != 2 || doubles.size() != 0 || triples.size() != 1) fail("triple edge outside G2");
    out.family = "G";
    out.rank = 2;
    out.to_canonical = norms[0] < norms[1] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    return out;
  }

  if (doubles.size() > 1) fail("several double edges in a finite diagram");

  if (doubles.size() == 1) {
    if (max_deg > 2) fail("double edge on a branched diagram");
    auto [a, b] = doubles[0];
    if (m == 2) {
      out.family = "C";
      out.rank = 2;
      out.to_canonical = norms[0] < norms[1] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
      return out;
    }
    int terminal = -1;
    if (g.adj[a].size() == 1) terminal = a;
    if (g.adj[b].size() == 1) terminal = b;
    if (terminal >= 0) {
      // B or C: the double edge sits at the short/long terminal node.
      int inner = terminal == a ? b : a;
      int start = -1;
      for (int i = 0; i < m; ++i) {
        if (g.adj[i].size() == 1 && i != terminal) start = i;
      }
      out.family = norms[terminal] < norms[inner] ? "B" : "C";
      out.rank = m;
      out.to_canonical = walk_path(g, start);
      return out;
    }
    // Interior double edge: F4, numbered from the long end.
    if (m != 4) fail("interior double edge outside F4");
    std::vector<int> ends;
    for (int i = 0; i < m; ++i) {
      if (g.adj[i].size() == 1) ends.push_back(i);
    }
    int start = norms[ends[0]] > norms[ends[1]] ? ends[0] : ends[1];
    out.family = "F";
    out.rank = 4;
    out.to_canonical = walk_path(g, start);
    return out;
  }

  // Simply laced.
  if (max_deg <= 2) {
    int start = -1;
    for (int i = 0; i < m; ++i) {
      if (g.adj[i].size() <= 1) {
        start = i;
        break;
      }
    }
    out.family = "A";
    out.rank = m;
    out.to_canonical = walk_path(g, start);
    return out;
  }
  if (max_deg > 3) fail("node of degree above 3");
  int center = -1;
  int fork_count = 0;
  for (int i = 0; i < m; ++i) {
    if (g.adj[i].size() == 3) {
      center = i;
      ++fork_count;
    }
  }
  if (fork_count != 1) fail("several branch nodes");
  std::vector<std::vector<int>> branches;
  for (int w : g.adj[center]) branches.push_back(walk_branch(g, center, w));
  std::sort(branches.begin(), branches.end(),
            [](const auto& x, const auto& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x[0] < y[0];
            });
  size_t l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();
  if (l1 == 1 && l2 == 1) {
    // D_n: the long branch reversed, the center, then the two tips.
    out.family = "D";
    out.rank = m;
    std::vector<int> order(branches[2].rbegin(), branches[2].rend());
    order.push_back(center);
    order.push_back(std::min(branches[0][0], branches[1][0]));
    order.push_back(std::max(branches[0][0], branches[1][0]));
    out.to_canonical = order;
    return out;
  }
  if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
    // E_6/7/8: nodes 1,3 on a two-node branch, 2 on the short one, 4 center.
    out.family = "E";
    out.rank = m;
    std::vector<int> order;
    order.push_back(branches[1][1]);  // node 1
    order.push_back(branches[0][0]);  // node 2
    order.push_back(branches[1][0]);  // node 3
    order.push_back(center);          // node 4
    for (int v : branches[2]) order.push_back(v);
    out.to_canonical = order;
    return out;
  }
  fail("branch lengths match no finite diagram");
}

AffineClassification classify_affine_gcm(const IMat& gcm) {
  const int m = static_cast<int>(gcm.size());
  if (m < 2) fail("affine diagram needs at least two nodes");
  const int n = m - 1;
  std::vector<TypeSpec> candidates;
  auto add = [&](std::string f, int r, int tw) {
    TypeSpec t{std::move(f), r, tw, true, Rat(1)};
    if (valid_type_spec(t)) candidates.push_back(t);
  };
  add("A", n, 1);
  add("C", n, 1);  // before B so that the B2~1 = C2~1 coincidence reports C
  add("B", n, 1);
  add("D", n, 1);
  add("E", n, 1);
  add("F", n, 1);
  add("G", n, 1);
  add("A", 2 * n, 2);
  add("A", 2 * n - 1, 2);
  add("D", m, 2);  // D_l^(2) has l nodes
  add("E", 6, 2);
  add("D", 4, 3);
  for (const auto& t : candidates) {
    if (t.family == "B" && t.rank == 2) continue;  // same diagram as C2~1
    auto perm = match_gcm(gcm, seed_gcm(t));
    if (perm) {
      AffineClassification out;
      out.family = t.family;
      out.rank = t.rank;
      out.twist = t.twist;
      out.to_seed = *perm;
      return out;
    }
  }
  fail("no affine diagram matches");
}

}  // namespace qham
