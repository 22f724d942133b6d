#include "gsp4/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp4 {

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return e.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  Echelon e = rref(aug);
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::vector<Vector> independent_subset(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    out.push_back(v);
    if (rank(Matrix::from_columns(out)) < out.size()) out.pop_back();
  }
  return out;
}

std::vector<Vector> complement_by_standard(const std::vector<Vector>& basis, std::size_t n) {
  std::vector<Vector> all = basis;
  std::vector<Vector> extra;
  for (std::size_t i = 0; i < n && all.size() < n; ++i) {
    Vector e(n);
    e[i] = 1;
    all.push_back(e);
    if (rank(Matrix::from_columns(all)) < all.size()) {
      all.pop_back();
    } else {
      extra.push_back(e);
    }
  }
  return extra;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (sgn(x) != 0) return std::nullopt;
    return Vector{};
  }
  return solve(Matrix::from_columns(basis), v);
}

Matrix restrict_to(const Matrix& a, const std::vector<Vector>& basis) {
  Matrix r(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto c = coordinates(basis, a * basis[j]);
    if (!c) throw std::domain_error("subspace is not invariant");
    for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*c)[i];
  }
  return r;
}

Matrix quotient_action(const Matrix& a, const std::vector<Vector>& basis) {
  const std::size_t n = a.rows();
  std::vector<Vector> comp = complement_by_standard(basis, n);
  std::vector<Vector> full = basis;
  full.insert(full.end(), comp.begin(), comp.end());
  Matrix p = Matrix::from_columns(full);
  Matrix conj = inverse(p) * a * p;
  const std::size_t k = basis.size();
  if (!conj.block(k, 0, n - k, k).is_zero()) throw std::domain_error("subspace is not invariant");
  return conj.block(k, k, n - k, n - k);
}

LinearConstraints& LinearConstraints::add(const LinearConstraints& other) {
  if (other.n != n) throw std::invalid_argument("constraint size mismatch");
  equations.insert(equations.end(), other.equations.begin(), other.equations.end());
  return *this;
}

namespace {

// Coefficient vector of (X^T B + B X)_{ij} as a functional on vec(X).
Vector form_entry_functional(const Matrix& b, std::size_t i, std::size_t j) {
  const std::size_t n = b.rows();
  Vector f(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    f[a * n + i] += b(a, j);
    f[a * n + j] += b(i, a);
  }
  return f;
}

}  // namespace

LinearConstraints isometry_lie_algebra(const Matrix& form) {
  LinearConstraints c{form.rows(), {}};
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < form.cols(); ++j) c.equations.push_back(form_entry_functional(form, i, j));
  return c;
}

LinearConstraints similitude_lie_algebra(const Matrix& form) {
  const std::size_t n = form.rows();
  LinearConstraints c{n, {}};
  std::size_t pi = n, pj = n;
  for (std::size_t i = 0; i < n && pi == n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(form(i, j)) != 0) {
        pi = i;
        pj = j;
        break;
      }
  if (pi == n) throw std::invalid_argument("zero form");
  Vector fp = form_entry_functional(form, pi, pj);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector f = form_entry_functional(form, i, j);
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = f[k] * form(pi, pj) - fp[k] * form(i, j);
      c.equations.push_back(std::move(f));
    }
  }
  return c;
}

LinearConstraints trace_zero(std::size_t n) {
  Vector f(n * n);
  for (std::size_t i = 0; i < n; ++i) f[i * n + i] = 1;
  return {n, {f}};
}

std::vector<Matrix> subspace_basis(const LinearConstraints& ambient) {
  return commutant_basis({}, ambient);
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& generators,
                                    const LinearConstraints& ambient) {
  const std::size_t n = ambient.n;
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator size mismatch");
  std::vector<Vector> eqs = ambient.equations;
  for (const auto& e : eqs)
    if (e.size() != n * n) throw std::invalid_argument("constraint length mismatch");
  // (Xg - gX)_{ij} = sum_k X_{ik} g_{kj} - g_{ik} X_{kj}
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector f(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          f[i * n + k] += g(k, j);
          f[k * n + j] -= g(i, k);
        }
        eqs.push_back(std::move(f));
      }
    }
  }
  std::vector<Vector> ker;
  if (eqs.empty()) {
    for (std::size_t k = 0; k < n * n; ++k) {
      Vector v(n * n);
      v[k] = 1;
      ker.push_back(v);
    }
  } else {
    ker = kernel(Matrix::from_rows(eqs));
  }
  std::vector<Matrix> out;
  out.reserve(ker.size());
  for (const auto& v : ker) out.push_back(unvec(v, n, n));
  return out;
}

std::size_t commutant_dimension(const std::vector<Matrix>& generators,
                                const LinearConstraints& ambient) {
  return commutant_basis(generators, ambient).size();
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier; exact in characteristic zero.
  Polynomial c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + Matrix::scalar(n, c[n - k + 1]);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  Matrix r = Matrix::zero(m.rows(), m.cols());
  for (std::size_t k = p.size(); k-- > 0;) r = r * m + Matrix::scalar(m.rows(), p[k]);
  return r;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational r = 0;
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(d);
  return d;
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return a;
}

Polynomial quotient(Polynomial a, const Polynomial& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Polynomial q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at(const Polynomial& p, const Rational& x) { return sgn(evaluate(p, x)); }

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_q(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Smallest-denominator rational in the closed interval [a, b].
Rational simplest_between(const Rational& a, const Rational& b) {
  if (sgn(a) <= 0 && sgn(b) >= 0) return 0;
  if (sgn(b) < 0) return -simplest_between(-b, -a);
  Rational fl = floor_q(a);
  if (fl == a) return a;
  if (fl + 1 <= b) return fl + 1;
  return fl + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& input) {
  Polynomial p = input;
  trim(p);
  if (p.size() <= 1) return {};
  std::vector<Rational> roots;
  if (sgn(p[0]) == 0) {
    roots.push_back(0);
    std::size_t z = 0;
    while (sgn(p[z]) == 0) ++z;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
  }
  if (p.size() > 1) {
    Polynomial sq = quotient(p, gcd(p, derivative(p)));
    // Integer-primitive form to bound root denominators by the leading coefficient.
    mpz_class lcm_den = 1;
    for (const auto& c : sq) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    Rational lead = abs(sq.back() * lcm_den);
    Rational bound = 1;
    for (const auto& c : sq) bound = std::max<Rational>(bound, abs(c / sq.back()));
    bound += 1;
    std::vector<Polynomial> sturm{sq, derivative(sq)};
    while (sturm.back().size() > 1) {
      Polynomial r = remainder(sturm[sturm.size() - 2], sturm.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      sturm.push_back(std::move(r));
    }
    Rational width = 1 / (2 * lead * lead);
    // Isolate each real root by bisection, then pick the unique candidate of small height.
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = sign_changes(sturm, lo) - sign_changes(sturm, hi);
      if (count == 0) continue;
      if (count == 1 && hi - lo < width) {
        Rational cand = simplest_between(lo, hi);
        if (sgn(evaluate(sq, cand)) == 0) roots.push_back(cand);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      if (sgn(evaluate(sq, mid)) == 0) {
        roots.push_back(mid);
        Rational eps = (hi - lo) / 1024;
        // Shrink away from the exact root so neighbours stay isolated.
        while (sign_changes(sturm, mid - eps) - sign_changes(sturm, mid + eps) != 1) eps /= 2;
        stack.push_back({lo, mid - eps});
        stack.push_back({mid + eps, hi});
      } else {
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::pair<std::vector<Vector>, std::vector<Vector>> fitting_split(const Matrix& m) {
  Matrix mn = power(m, static_cast<unsigned>(m.rows()));
  std::vector<Vector> ker = kernel(mn);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < mn.cols(); ++j) cols.push_back(mn.column(j));
  return {ker, independent_subset(cols)};
}

EigenSplit rational_eigensplit(const Matrix& g) {
  if (!g.square()) throw std::invalid_argument("eigensplit of non-square matrix");
  const std::size_t n = g.rows();
  EigenSplit out;
  Matrix rest = Matrix::identity(n);
  for (const auto& r : rational_roots(characteristic_polynomial(g))) {
    Matrix shifted = g - Matrix::scalar(n, r);
    auto [ker, img] = fitting_split(shifted);
    out.rational.push_back({r, ker});
    rest = rest * power(shifted, static_cast<unsigned>(n));
  }
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(rest.column(j));
  out.irrational = independent_subset(cols);
  return out;
}

QuadraticSpace::QuadraticSpace(Matrix g) : gram(std::move(g)) {
  if (!gram.square() || gram != gram.transpose()) throw std::invalid_argument("gram must be symmetric");
  if (sgn(determinant(gram)) == 0) throw std::invalid_argument("gram must be nondegenerate");
}

Matrix restricted_form(const Matrix& form, const std::vector<Vector>& basis) {
  Matrix r(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) r(i, j) = bilinear(form, basis[i], basis[j]);
  return r;
}

std::vector<Vector> orthogonal_complement(const Matrix& form, const std::vector<Vector>& basis) {
  if (basis.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < form.rows(); ++i) {
      Vector e(form.rows());
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  std::vector<Vector> rows;
  for (const auto& b : basis) rows.push_back(form.transpose() * b);
  return kernel(Matrix::from_rows(rows));
}

namespace {

// Vectors in span(space) expressed in ambient coordinates; works inside a subspace.
std::vector<Vector> standard_space(std::size_t n) {
  std::vector<Vector> s;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    s.push_back(e);
  }
  return s;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs) {
  Vector v(basis.empty() ? 0 : basis[0].size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[k] * basis[k][i];
  return v;
}

}  // namespace

std::vector<Vector> orthogonal_basis(const Matrix& sym) {
  std::vector<Vector> space = standard_space(sym.rows());
  std::vector<Vector> out;
  while (!space.empty()) {
    Vector pick;
    for (const auto& v : space)
      if (sgn(bilinear(sym, v, v)) != 0) {
        pick = v;
        break;
      }
    if (pick.empty()) {
      for (std::size_t i = 0; i < space.size() && pick.empty(); ++i)
        for (std::size_t j = i + 1; j < space.size(); ++j)
          if (sgn(bilinear(sym, space[i], space[j])) != 0) {
            pick = space[i];
            for (std::size_t k = 0; k < pick.size(); ++k) pick[k] += space[j][k];
            break;
          }
    }
    if (pick.empty()) throw std::domain_error("degenerate symmetric form");
    out.push_back(pick);
    // Complement of pick inside span(space).
    Matrix restricted(1, space.size());
    for (std::size_t k = 0; k < space.size(); ++k) restricted(0, k) = bilinear(sym, pick, space[k]);
    std::vector<Vector> next;
    for (const auto& c : kernel(restricted)) next.push_back(combine(space, c));
    space = std::move(next);
  }
  return out;
}

std::vector<std::pair<Vector, Vector>> symplectic_basis(const Matrix& alt) {
  std::vector<Vector> space = standard_space(alt.rows());
  std::vector<std::pair<Vector, Vector>> out;
  while (!space.empty()) {
    Vector e = space[0];
    Vector f;
    for (std::size_t k = 1; k < space.size(); ++k) {
      Rational p = bilinear(alt, e, space[k]);
      if (sgn(p) != 0) {
        f = space[k];
        for (auto& x : f) x /= p;
        break;
      }
    }
    if (f.empty()) throw std::domain_error("degenerate alternating form");
    out.push_back({e, f});
    Matrix restricted(2, space.size());
    for (std::size_t k = 0; k < space.size(); ++k) {
      restricted(0, k) = bilinear(alt, e, space[k]);
      restricted(1, k) = bilinear(alt, f, space[k]);
    }
    std::vector<Vector> next;
    for (const auto& c : kernel(restricted)) next.push_back(combine(space, c));
    space = std::move(next);
  }
  return out;
}

}  // namespace gsp4
