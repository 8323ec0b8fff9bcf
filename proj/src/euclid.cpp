#include "qham/euclid.hpp"

#include <algorithm>

namespace qham {

namespace {

void check_dim(const MetricSpace& space, const QVec& v, const char* what) {
  if (static_cast<int>(v.size()) != space.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

MetricSpace::MetricSpace(QMat gram, std::vector<Rat> factor_scales)
    : gram_(std::move(gram)), factor_scales_(std::move(factor_scales)) {
  int n = static_cast<int>(gram_.size());
  for (const auto& row : gram_) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("gram matrix is not square");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw std::invalid_argument("gram matrix is not symmetric");
      }
    }
  // Positive definiteness via leading principal minors (exact).
  for (int k = 1; k <= n; ++k) {
    QMat minor(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = gram_[i][j];
    if (!(q_det(std::move(minor)) > Rat(0))) {
      throw std::invalid_argument("gram matrix is not positive definite");
    }
  }
  for (const auto& s : factor_scales_) {
    if (!(s > Rat(0))) {
      throw std::invalid_argument("factor scales must be positive");
    }
  }
  gram_inv_ = n > 0 ? q_inverse(gram_) : QMat{};
}

Rat MetricSpace::inner(const QVec& u, const QVec& v) const {
  check_dim(*this, u, "inner");
  check_dim(*this, v, "inner");
  return q_dot(u, q_matvec(gram_, v));
}

Rat evaluate(const MetricSpace& space, const AffineFunctional& f,
             const AffinePoint& x) {
  check_dim(space, f.gradient, "evaluate");
  check_dim(space, x, "evaluate");
  return f.constant + space.inner(f.gradient, x);
}

AffineFunctional functional_from_coordinates(const MetricSpace& space,
                                             const QVec& coeffs,
                                             const Rat& constant) {
  check_dim(space, coeffs, "functional_from_coordinates");
  return {q_matvec(space.gram_inv(), coeffs), constant};
}

QVec coordinate_form(const MetricSpace& space, const AffineFunctional& f) {
  check_dim(space, f.gradient, "coordinate_form");
  return q_matvec(space.gram(), f.gradient);
}

RationalVector coroot(const MetricSpace& space, const AffineFunctional& f) {
  Rat n2 = space.norm2(f.gradient);
  if (n2.is_zero()) {
    throw std::domain_error("coroot of a constant functional");
  }
  return q_scale(Rat(2) / n2, f.gradient);
}

AffinePoint reflect_point(const MetricSpace& space, const AffineFunctional& f,
                          const AffinePoint& x) {
  return q_sub(x, q_scale(evaluate(space, f, x), coroot(space, f)));
}

AffineFunctional reflect_functional(const MetricSpace& space,
                                    const AffineFunctional& f,
                                    const AffineFunctional& g) {
  Rat pairing = space.inner(g.gradient, coroot(space, f));
  return {q_sub(g.gradient, q_scale(pairing, f.gradient)),
          g.constant - pairing * f.constant};
}

// ---------------------------------------------------------------------------

Lattice Lattice::from_generators(int ambient_dim, const QMat& generators) {
  Lattice l;
  l.ambient_dim_ = ambient_dim;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient_dim) {
      throw std::invalid_argument("lattice generator dimension mismatch");
    }
  }
  if (generators.empty()) return l;
  auto [m, d] = clear_denominators(generators);
  l.int_basis_ = row_lattice_hnf(m);
  l.denom_ = l.int_basis_.empty() ? 1 : d;
  // d is minimal already: every generator lies in the lattice, so the lcm of
  // generator denominators equals the exponent of (L + Z^n)/Z^n.
  return l;
}

Lattice Lattice::zero(int ambient_dim) {
  Lattice l;
  l.ambient_dim_ = ambient_dim;
  return l;
}

Lattice Lattice::standard(int dim) {
  Lattice l;
  l.ambient_dim_ = dim;
  l.int_basis_ = i_identity(dim);
  return l;
}

QMat Lattice::basis() const {
  QMat b(int_basis_.size(), QVec(ambient_dim_));
  for (size_t i = 0; i < int_basis_.size(); ++i)
    for (int j = 0; j < ambient_dim_; ++j) {
      b[i][j] = Rat(int_basis_[i][j], denom_);
    }
  return b;
}

bool Lattice::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw std::invalid_argument("lattice membership dimension mismatch");
  }
  IVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(denom_);
    if (!s.is_integer()) return false;
    scaled[i] = s.as_integer();
  }
  if (int_basis_.empty()) {
    return std::all_of(scaled.begin(), scaled.end(), [](Int x) { return x == 0; });
  }
  return solve_in_hnf_basis(int_basis_, scaled).has_value();
}

bool Lattice::contains_lattice(const Lattice& other) const {
  for (const auto& g : other.basis()) {
    if (!contains(g)) return false;
  }
  return true;
}

Lattice Lattice::scaled(const Rat& c) const {
  QMat gens = basis();
  for (auto& row : gens) row = q_scale(c, row);
  return from_generators(ambient_dim_, gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("lattice_sum dimension mismatch");
  }
  QMat gens = a.basis();
  for (auto& row : b.basis()) gens.push_back(row);
  return Lattice::from_generators(a.ambient_dim(), gens);
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("lattice_intersect dimension mismatch");
  }
  if (a.is_zero() || b.is_zero()) return Lattice::zero(a.ambient_dim());
  // Scale both to a common denominator D, then solve x*Ba = y*Bb in Z.
  Int d = lcm_ll(a.denom(), b.denom());
  IMat ba = a.int_basis(), bb = b.int_basis();
  for (auto& row : ba)
    for (auto& x : row) x = checked_mul(x, d / a.denom());
  for (auto& row : bb)
    for (auto& x : row) x = checked_mul(x, d / b.denom());
  IMat stacked = ba;
  for (auto& row : bb) stacked.push_back(row);
  IMat ker = left_kernel(stacked);
  QMat gens;
  Rat inv_d = Rat(1, d);
  for (const auto& k : ker) {
    IVec coeffs(k.begin(), k.begin() + ba.size());
    IVec v = i_vecmat(coeffs, ba);
    QVec g(v.size());
    for (size_t j = 0; j < v.size(); ++j) g[j] = Rat(v[j]) * inv_d;
    gens.push_back(std::move(g));
  }
  return Lattice::from_generators(a.ambient_dim(), gens);
}

Lattice dual_lattice(const MetricSpace& space, const Lattice& l) {
  if (l.rank() != space.dim()) {
    throw std::domain_error("dual_lattice of a non-full-rank lattice");
  }
  return dual_in_span(space, l);
}

Lattice dual_in_span(const MetricSpace& space, const Lattice& l) {
  if (l.ambient_dim() != space.dim()) {
    throw std::invalid_argument("dual_in_span dimension mismatch");
  }
  if (l.is_zero()) return Lattice::zero(l.ambient_dim());
  // Rows of (B G B^T)^{-1} B pair dually with the basis rows and lie in
  // span(B).
  QMat b = l.basis();
  QMat bg = q_mul(b, space.gram());
  QMat gramian = q_mul(bg, q_transpose(b));
  QMat dual_rows = q_mul(q_inverse(gramian), b);
  return Lattice::from_generators(l.ambient_dim(), dual_rows);
}

AbelianGroup lattice_quotient(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("lattice_quotient dimension mismatch");
  }
  if (!a.contains_lattice(b)) {
    throw std::domain_error("lattice_quotient: not a sublattice");
  }
  IMat rels;
  for (const auto& g : b.basis()) {
    auto coords = coordinates_in_lattice(a, g);
    rels.push_back(*coords);  // membership checked above
  }
  return quotient_group(a.rank(), rels);
}

std::optional<IVec> coordinates_in_lattice(const Lattice& l, const QVec& v) {
  if (static_cast<int>(v.size()) != l.ambient_dim()) {
    throw std::invalid_argument("coordinates_in_lattice dimension mismatch");
  }
  IVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l.denom());
    if (!s.is_integer()) return std::nullopt;
    scaled[i] = s.as_integer();
  }
  return solve_in_hnf_basis(l.int_basis(), scaled);
}

std::optional<QVec> primitive_in_lattice(const Lattice& l, const QVec& direction) {
  if (q_is_zero(direction)) {
    throw std::invalid_argument("primitive_in_lattice of zero direction");
  }
  auto y = q_solve_left(l.basis(), direction);
  if (!y || q_vecmat(*y, l.basis()) != direction) return std::nullopt;
  // The primitive ray element has basis coordinates coeffs/gcd(coeffs).
  IVec coeffs = clear_denominators(*y).first;
  Int g = 0;
  for (Int c : coeffs) g = gcd_ll(g, c);
  if (g == 0) return std::nullopt;
  QVec result(direction.size(), Rat(0));
  QMat basis = l.basis();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    result = q_add(result, q_scale(Rat(coeffs[i], g), basis[i]));
  }
  return result;
}

Lattice lattice_intersect_subspace(const Lattice& l, const QMat& span_rows) {
  if (l.is_zero()) return l;
  // x = c * B lies in span(S) iff x annihilates the right nullspace of S
  // under the standard pairing; solve for integer coefficient rows c.
  QMat z = q_left_nullspace(q_transpose(span_rows.empty()
                                            ? QMat(1, QVec(l.ambient_dim(), Rat(0)))
                                            : span_rows));
  if (z.empty()) return l;  // the span is the whole space
  QMat m = q_mul(l.basis(), q_transpose(z));
  IMat coeffs = left_kernel(clear_denominators(m).first);
  QMat gens;
  for (const auto& c : coeffs) gens.push_back(q_vecmat(to_q(c), l.basis()));
  return Lattice::from_generators(l.ambient_dim(), gens);
}

QMat projection_onto_span(const MetricSpace& space, const QMat& span_rows) {
  int n = space.dim();
  Lattice span_basis = Lattice::from_generators(n, span_rows);
  if (span_basis.is_zero()) return QMat(n, QVec(n, Rat(0)));
  QMat b = span_basis.basis();
  // P = G B^T (B G B^T)^{-1} B, acting on row vectors from the right.
  QMat bg = q_mul(b, space.gram());
  QMat gramian = q_mul(bg, q_transpose(b));
  return q_mul(q_mul(q_transpose(bg), q_inverse(gramian)), b);
}

Lattice map_lattice(const Lattice& l, const QMat& p) {
  QMat gens;
  for (const auto& g : l.basis()) gens.push_back(q_vecmat(g, p));
  return Lattice::from_generators(static_cast<int>(p.empty() ? 0 : p[0].size()),
                                  gens);
}

// ---------------------------------------------------------------------------

std::vector<std::string> vector_strings(const QVec& v) {
  std::vector<std::string> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].str();
  return out;
}

QVec vector_from_strings(const std::vector<std::string>& parts) {
  QVec v(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) v[i] = Rat::parse(parts[i]);
  return v;
}

}  // namespace qham
