#include "gsp4/dualgroups.hpp"

#include <stdexcept>

#include "gsp4/linalg.hpp"

namespace gsp4 {

int GroupTag::dual_dim() const {
  switch (kind) {
    case GroupKind::GSpinOdd: return 2 * n;
    case GroupKind::SpGL1: return 2 * n + 1;
    case GroupKind::GSpinEven: return 2 * n;
    case GroupKind::GLGL1: return n;
  }
  return 0;
}

std::string GroupTag::name() const {
  switch (kind) {
    case GroupKind::GSpinOdd: return "GSpin" + std::to_string(2 * n + 1);
    case GroupKind::SpGL1: return "Sp" + std::to_string(2 * n) + "xGL1";
    case GroupKind::GSpinEven:
      return "GSpin" + std::to_string(2 * n) + (alpha == "1" ? "" : "^" + alpha);
    case GroupKind::GLGL1: return "GL" + std::to_string(n) + "xGL1";
  }
  return "?";
}

GroupTag parse_group(std::string_view text) {
  auto number = [&](std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("bad group name: " + std::string(text));
    int v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad group name: " + std::string(text));
      v = v * 10 + (c - '0');
    }
    return v;
  };
  auto ends_with = [&](std::string_view suffix) {
    return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
  };
  if (text.starts_with("GSpin")) {
    std::string_view rest = text.substr(5);
    std::string alpha = "1";
    if (auto hat = rest.find('^'); hat != std::string_view::npos) {
      alpha = std::string(rest.substr(hat + 1));
      rest = rest.substr(0, hat);
      if (alpha.empty()) throw std::invalid_argument("bad group name: " + std::string(text));
    }
    int m = number(rest);
    if (m % 2 == 1) {
      if (alpha != "1") throw std::invalid_argument("odd GSpin takes no square class");
      return GroupTag::gspin_odd(m / 2);
    }
    return GroupTag::gspin_even(m / 2, alpha);
  }
  if (text.starts_with("Sp") && ends_with("xGL1")) {
    int m = number(text.substr(2, text.size() - 6));
    if (m % 2 != 0) throw std::invalid_argument("bad group name: " + std::string(text));
    return GroupTag::sp_gl1(m / 2);
  }
  if (text.starts_with("GL") && ends_with("xGL1")) {
    return GroupTag::gl_gl1(number(text.substr(2, text.size() - 6)));
  }
  throw std::invalid_argument("unknown group: " + std::string(text));
}

int sign_of_group(const GroupTag& tag) { return tag.kind == GroupKind::GSpinOdd ? -1 : 1; }

Matrix j_matrix(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 1; i <= n; ++i) j(i - 1, n - i) = (i % 2 == 0) ? 1 : -1;
  return j;
}

Matrix dual_form(const GroupTag& tag) {
  switch (tag.kind) {
    case GroupKind::GSpinOdd: return j_matrix(static_cast<std::size_t>(2 * tag.n));
    case GroupKind::SpGL1: return Matrix::antidiagonal(static_cast<std::size_t>(2 * tag.n + 1));
    case GroupKind::GSpinEven: return Matrix::antidiagonal(static_cast<std::size_t>(2 * tag.n));
    case GroupKind::GLGL1: return Matrix();
  }
  return Matrix();
}

DualElement operator*(const DualElement& a, const DualElement& b) { return {a.g * b.g, a.x * b.x}; }

std::optional<Rational> similitude_factor(const Matrix& form, const Matrix& g) {
  if (form.rows() == 0 || g.rows() != form.rows() || !g.square()) return std::nullopt;
  Matrix t = g.transpose() * form * g;
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    for (std::size_t j = 0; j < form.cols(); ++j) {
      if (sgn(form(i, j)) == 0) {
        if (sgn(t(i, j)) != 0) return std::nullopt;
        continue;
      }
      Rational r = t(i, j) / form(i, j);
      if (lambda && *lambda != r) return std::nullopt;
      lambda = r;
    }
  }
  if (lambda && sgn(*lambda) == 0) return std::nullopt;
  return lambda;
}

DualElement apply_theta(const DualElement& e, const Matrix& j) {
  if (!invertible(e.g)) throw std::domain_error("theta of a singular matrix");
  return {j * inverse(e.g).transpose() * inverse(j), e.x * determinant(e.g)};
}

DualElement apply_theta(const DualElement& e) { return apply_theta(e, j_matrix(e.g.rows())); }

DualElement apply_dual_theta(const DualElement& e, const Matrix& j) {
  if (!invertible(e.g)) throw std::domain_error("dual theta of a singular matrix");
  return {j * inverse(e.g).transpose() * inverse(j) * e.x, e.x};
}

bool fixed_point_check(const DualElement& e) {
  if (!invertible(e.g) || sgn(e.x) == 0) return false;
  return apply_dual_theta(e, j_matrix(e.g.rows())) == e;
}

std::pair<Matrix, Rational> std_rep(const GroupTag& tag, const DualElement& e) {
  const auto n = static_cast<std::size_t>(tag.dual_dim());
  if (e.g.rows() != n || !e.g.square()) throw std::domain_error("element has the wrong size for " + tag.name());
  Matrix form = dual_form(tag);
  switch (tag.kind) {
    case GroupKind::GSpinOdd: {
      auto mu = similitude_factor(form, e.g);
      if (!mu || *mu != e.x) throw std::domain_error("not a symplectic similitude with the stated factor");
      return {e.g, *mu};
    }
    case GroupKind::SpGL1: {
      auto mu = similitude_factor(form, e.g);
      if (!mu || *mu != 1 || determinant(e.g) != 1 || sgn(e.x) == 0)
        throw std::domain_error("not an element of SO x GL1");
      return {e.g, e.x};
    }
    case GroupKind::GSpinEven: {
      auto mu = similitude_factor(form, e.g);
      Rational mun = 1;
      if (mu)
        for (int k = 0; k < tag.n; ++k) mun *= *mu;
      if (!mu || *mu != e.x || determinant(e.g) != mun)
        throw std::domain_error("not an element of GSO with the stated similitude");
      return {e.g, *mu};
    }
    case GroupKind::GLGL1:
      if (!invertible(e.g) || sgn(e.x) == 0) throw std::domain_error("not an element of GL x GL1");
      return {e.g, e.x};
  }
  throw std::logic_error("unreachable");
}

namespace {

constexpr std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int permutation_sign(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  std::size_t p[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) return 0;
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

ExteriorSquareFrame build_frame() {
  ExteriorSquareFrame f;
  f.wedge_pairing = Matrix(6, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      f.wedge_pairing(a, b) = permutation_sign(kPairs[a][0], kPairs[a][1], kPairs[b][0], kPairs[b][1]);
  Matrix jinv = inverse(j_matrix(4));
  f.omega = Vector(6);
  for (std::size_t a = 0; a < 6; ++a) f.omega[a] = jinv(kPairs[a][0], kPairs[a][1]);
  Rational ww = bilinear(f.wedge_pairing, f.omega, f.omega);
  std::vector<Vector> projected;
  for (std::size_t a = 0; a < 6; ++a) {
    Vector v(6);
    v[a] = 1;
    Rational c = bilinear(f.wedge_pairing, v, f.omega) / ww;
    for (std::size_t k = 0; k < 6; ++k) v[k] -= c * f.omega[k];
    projected.push_back(v);
  }
  f.complement = independent_subset(projected);
  std::vector<Vector> cols{f.omega};
  cols.insert(cols.end(), f.complement.begin(), f.complement.end());
  f.frame = Matrix::from_columns(cols);
  f.gram5 = restricted_form(f.wedge_pairing, f.complement);
  return f;
}

}  // namespace

Matrix exterior_square(const Matrix& g) {
  if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("exterior square is implemented for 4x4");
  Matrix w(6, 6);
  for (std::size_t src = 0; src < 6; ++src) {
    std::size_t i = kPairs[src][0], j = kPairs[src][1];
    for (std::size_t dst = 0; dst < 6; ++dst) {
      std::size_t k = kPairs[dst][0], l = kPairs[dst][1];
      w(dst, src) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
    }
  }
  return w;
}

const ExteriorSquareFrame& so5_frame() {
  static const ExteriorSquareFrame frame = build_frame();
  return frame;
}

Matrix f_map(const DualElement& e) {
  if (sgn(e.x) == 0) throw std::domain_error("f needs a nonzero GL1 coordinate");
  return exterior_square(e.g) * (1 / e.x);
}

Matrix project_to_so5(const DualElement& e) {
  if (!fixed_point_check(e)) throw std::domain_error("project_to_so5: input is not a J-symplectic similitude");
  const auto& fr = so5_frame();
  Matrix f = f_map(e);
  if (f * fr.omega != fr.omega) throw std::domain_error("project_to_so5: omega line is not fixed");
  return restrict_to(f, fr.complement);
}

namespace {

DualElement theta_only(const Matrix& g, const Matrix& j) { return apply_theta(DualElement{g, 1}, j); }

}  // namespace

PinningReport pinning_fixed_by_theta(const Matrix& j) {
  const std::size_t n = j.rows();
  PinningReport rep;
  auto fail = [&](std::string what) {
    if (rep.pass) {
      rep.pass = false;
      rep.failing = std::move(what);
    }
  };
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<long>(2 * i + 3);
  Matrix torus = Matrix::diagonal(t);
  if (!theta_only(torus, j).g.is_diagonal()) fail("diagonal torus");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix u = Matrix::identity(n) + Matrix::unit(n, a, b);
      if (!theta_only(torus * u, j).g.is_upper_triangular())
        fail("Borel (E_" + std::to_string(a + 1) + std::to_string(b + 1) + ")");
    }
  std::vector<bool> hit(n, false);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    Matrix u = Matrix::identity(n) + Matrix::unit(n, a, a + 1);
    Matrix img = theta_only(u, j).g - Matrix::identity(n);
    bool found = false;
    for (std::size_t b = 0; b + 1 < n; ++b)
      if (img == Matrix::unit(n, b, b + 1) && !hit[b]) {
        hit[b] = found = true;
        break;
      }
    if (!found) fail("root vector E_" + std::to_string(a + 1) + std::to_string(a + 2));
  }
  return rep;
}

PinningReport pinning_fixed_by_theta() { return pinning_fixed_by_theta(j_matrix(4)); }

}  // namespace gsp4
