#include "gsp4/endoscopy.hpp"

#include <stdexcept>

#include "gsp4/linalg.hpp"

namespace gsp4 {

EndoscopicAmbient parse_ambient(std::string_view text) {
  if (text == "Gamma~" || text == "Gamma" || text == "GL4xGL1") return EndoscopicAmbient::TwistedGamma;
  if (text == "GSpin5") return EndoscopicAmbient::GSpin5;
  if (text == "GSpin4") return EndoscopicAmbient::GSpin4;
  throw std::invalid_argument("unsupported endoscopic ambient: " + std::string(text));
}

std::string ambient_name(EndoscopicAmbient a) {
  switch (a) {
    case EndoscopicAmbient::TwistedGamma: return "Gamma~";
    case EndoscopicAmbient::GSpin5: return "GSpin5";
    case EndoscopicAmbient::GSpin4: return "GSpin4";
  }
  return "?";
}

Matrix ambient_form(EndoscopicAmbient ambient) {
  switch (ambient) {
    case EndoscopicAmbient::TwistedGamma: return Matrix();
    case EndoscopicAmbient::GSpin5: return j_matrix(4);
    case EndoscopicAmbient::GSpin4: return Matrix::antidiagonal(4);
  }
  return Matrix();
}

std::vector<EndoscopicDatum> catalog(EndoscopicAmbient ambient) {
  std::vector<EndoscopicDatum> out;
  switch (ambient) {
    case EndoscopicAmbient::TwistedGamma: {
      EndoscopicDatum a;
      a.name = "GSpin5";
      a.ambient = ambient;
      a.h_descriptor = "GSpin5";
      a.xi = XiKind::GSp4;
      a.s = {Matrix::identity(4), 1};
      a.iota = Rational(1);
      a.hat_h_dim = 11;
      out.push_back(a);

      EndoscopicDatum b;
      b.name = "GSpin4^alpha";
      b.ambient = ambient;
      b.h_descriptor = "GSpin4^alpha";
      b.xi = XiKind::GO4;
      b.s = {Matrix::diagonal({-1, -1, 1, 1}), 1};
      b.gram = Matrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
      b.frobenius = Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
      b.hat_h_dim = 7;
      out.push_back(b);

      EndoscopicDatum r;
      r.name = "R^alpha";
      r.ambient = ambient;
      r.h_descriptor = "(GSpin2^alpha x GSpin3)/GL1";
      r.xi = XiKind::RAlpha;
      r.needs_nontrivial_alpha = true;
      r.s = {Matrix::diagonal({-1, 1, 1, 1}), 1};
      r.frobenius = Matrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
      r.hat_h_dim = 5;
      out.push_back(r);
      break;
    }
    case EndoscopicAmbient::GSpin5: {
      EndoscopicDatum h;
      h.name = "H1";
      h.ambient = ambient;
      h.h_descriptor = "(GL2 x GL2)/GL1";
      h.xi = XiKind::H1;
      // not printed; any s with this centraliser will do
      h.s = {Matrix::diagonal({-1, 1, 1, -1}), 1};
      h.iota = Rational(1, 4);
      h.hat_h_dim = 7;
      out.push_back(h);
      break;
    }
    case EndoscopicAmbient::GSpin4: {
      EndoscopicDatum h;
      h.name = "H2^alpha";
      h.ambient = ambient;
      h.h_descriptor = "(GSpin2^alpha x GSpin2^alpha)/GL1";
      h.xi = XiKind::H2;
      h.needs_nontrivial_alpha = true;
      h.s = {Matrix::diagonal({1, -1, -1, 1}), 1};
      h.frobenius = Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
      h.hat_h_dim = 3;
      out.push_back(h);
      break;
    }
  }
  return out;
}

namespace {

bool twisted(const EndoscopicDatum& d) { return d.ambient == EndoscopicAmbient::TwistedGamma; }

Vector lie_coords(const Matrix& x, const Rational& t, bool with_t) {
  Vector v = vec(x);
  if (with_t) v.push_back(t);
  return v;
}

// t with X^T B + B X = t B; assumes X lies in the similitude algebra.
Rational lie_similitude(const Matrix& form, const Matrix& x) {
  Matrix m = x.transpose() * form + form * x;
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < form.cols(); ++j)
      if (sgn(form(i, j)) != 0) return m(i, j) / form(i, j);
  return 0;
}

Matrix xi_form(const EndoscopicDatum& d) {
  switch (d.xi) {
    case XiKind::GSp4: return j_matrix(4);
    case XiKind::GO4: return d.gram ? *d.gram : Matrix::antidiagonal(4);
    default: return ambient_form(d.ambient);
  }
}

Matrix random_gl2(Sampler& rng) {
  Matrix m(2, 2);
  do {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = rng.integer(-4, 4);
  } while (sgn(determinant(m)) == 0);
  return m;
}

Matrix random_sl2(Sampler& rng) {
  Matrix u{{1, rng.rational(3)}, {0, 1}};
  Matrix l{{1, 0}, {rng.rational(3), 1}};
  Matrix u2{{1, rng.rational(3)}, {0, 1}};
  return u * l * u2;
}

}  // namespace

Matrix twisted_lie_action(const EndoscopicDatum& d) {
  const Matrix& s = d.s.g;
  Matrix sinv = inverse(s);
  if (!twisted(d)) {
    Matrix a(16, 16);
    for (std::size_t k = 0; k < 16; ++k) {
      Matrix e = Matrix::unit(4, k / 4, k % 4);
      Vector col = vec(s * e * sinv);
      for (std::size_t r = 0; r < 16; ++r) a(r, k) = col[r];
    }
    return a;
  }
  const Matrix j = j_matrix(4);
  const Matrix jinv = inverse(j);
  Matrix a(17, 17);
  for (std::size_t k = 0; k < 17; ++k) {
    Matrix x(4, 4);
    Rational t = 0;
    if (k < 16)
      x(k / 4, k % 4) = 1;
    else
      t = 1;
    Matrix img = s * (-(j * x.transpose() * jinv) + Matrix::scalar(4, t)) * sinv;
    Vector col = lie_coords(img, t, true);
    for (std::size_t r = 0; r < 17; ++r) a(r, k) = col[r];
  }
  return a;
}

std::size_t centralizer_dimension(const EndoscopicDatum& d) {
  if (!twisted(d)) return commutant_dimension({d.s.g}, similitude_lie_algebra(ambient_form(d.ambient)));
  Matrix a = twisted_lie_action(d) - Matrix::identity(17);
  return kernel(a).size();
}

std::vector<Vector> xi_lie_basis(const EndoscopicDatum& d) {
  const bool t = twisted(d);
  std::vector<Vector> out;
  switch (d.xi) {
    case XiKind::GSp4:
    case XiKind::GO4: {
      Matrix form = xi_form(d);
      for (const auto& x : subspace_basis(similitude_lie_algebra(form)))
        out.push_back(lie_coords(x, lie_similitude(form, x), t));
      break;
    }
    case XiKind::RAlpha: {
      for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j) {
          Matrix x = Matrix::unit(4, i, j);
          Rational tr = i == j ? 1 : 0;
          x(3, 3) = tr;
          out.push_back(lie_coords(x, tr, t));
        }
      Matrix x = Matrix::unit(4, 0, 0) - Matrix::unit(4, 3, 3);
      out.push_back(lie_coords(x, 0, t));
      break;
    }
    case XiKind::H1: {
      const std::size_t a[2] = {0, 3}, b[2] = {1, 2};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          if (i == j) continue;
          out.push_back(lie_coords(Matrix::unit(4, a[i], a[j]), 0, t));
          out.push_back(lie_coords(Matrix::unit(4, b[i], b[j]), 0, t));
        }
      // traces must agree
      out.push_back(lie_coords(Matrix::unit(4, 0, 0) - Matrix::unit(4, 3, 3), 0, t));
      out.push_back(lie_coords(Matrix::unit(4, 1, 1) - Matrix::unit(4, 2, 2), 0, t));
      out.push_back(lie_coords(Matrix::unit(4, 0, 0) + Matrix::unit(4, 1, 1), 1, t));
      break;
    }
    case XiKind::H2: {
      out.push_back(lie_coords(Matrix::diagonal({1, 0, 0, -1}), 0, t));
      out.push_back(lie_coords(Matrix::diagonal({0, 1, -1, 0}), 0, t));
      out.push_back(lie_coords(Matrix::diagonal({0, 0, 1, 1}), 1, t));
      break;
    }
  }
  return out;
}

DualElement embed_h1(const Matrix& a, const Matrix& b) {
  if (determinant(a) != determinant(b)) throw std::domain_error("H1 pair needs equal determinants");
  const std::size_t ia[2] = {0, 3}, ib[2] = {1, 2};
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      g(ia[i], ia[j]) = a(i, j);
      g(ib[i], ib[j]) = b(i, j);
    }
  return {g, determinant(a)};
}

DualElement xi_sample(const EndoscopicDatum& d, Sampler& rng) {
  switch (d.xi) {
    case XiKind::GSp4: {
      Rational mu;
      Matrix g = random_gsp4(rng, &mu);
      return {g, mu};
    }
    case XiKind::GO4: {
      Matrix form = xi_form(d);
      Rational a = rng.nonzero_rational(3), b = rng.nonzero_rational(3), l = rng.nonzero_rational(4);
      // the torus below preserves both antidiagonal-type forms used here
      Matrix t = Matrix::diagonal({a, b, l / b, l / a});
      Matrix g = random_reflections(rng, form, 2) * t * random_reflections(rng, form, 2);
      return {g, l};
    }
    case XiKind::RAlpha: {
      Matrix a = random_gl2(rng);
      Rational x1 = rng.nonzero_rational(3);
      Matrix g(4, 4);
      g(0, 0) = x1;
      g.set_block(1, 1, a);
      g(3, 3) = determinant(a) / x1;
      return {g, determinant(a)};
    }
    case XiKind::H1: {
      Matrix a = random_gl2(rng);
      Matrix b = random_sl2(rng) * Matrix::diagonal({determinant(a), 1}) * random_sl2(rng);
      return embed_h1(a, b);
    }
    case XiKind::H2: {
      Rational a = rng.nonzero_rational(3), b = rng.nonzero_rational(3), l = rng.nonzero_rational(4);
      return {Matrix::diagonal({a, b, l / b, l / a}), l};
    }
  }
  throw std::logic_error("unreachable");
}

bool fixed_by_datum(const EndoscopicDatum& d, const DualElement& e) {
  if (!invertible(e.g)) return false;
  const Matrix& s = d.s.g;
  Matrix sinv = inverse(s);
  if (twisted(d)) {
    DualElement img = apply_dual_theta(e, j_matrix(4));
    return s * img.g * sinv == e.g && img.x == e.x;
  }
  auto mu = similitude_factor(ambient_form(d.ambient), e.g);
  if (!mu || *mu != e.x) return false;
  return s * e.g * sinv == e.g;
}

CentralizerReport verify_centralizer(const EndoscopicDatum& d, std::uint64_t seed, int samples) {
  CentralizerReport rep;
  rep.datum = ambient_name(d.ambient) + "/" + d.name;
  rep.expected = d.hat_h_dim;
  auto fail = [&](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };
  try {
    rep.computed = centralizer_dimension(d);
  } catch (const std::exception& ex) {
    fail(std::string("centraliser: ") + ex.what());
    return rep;
  }
  rep.dimension_ok = rep.computed == rep.expected;
  if (!rep.dimension_ok) fail("centraliser dimension " + std::to_string(rep.computed));

  // Lie xi(H^) sits in the fixed space and has the same dimension.
  const bool t = twisted(d);
  const std::size_t n = t ? 17 : 16;
  Matrix fix = twisted_lie_action(d) - Matrix::identity(n);
  auto basis = xi_lie_basis(d);
  std::vector<Matrix> ambient_basis;
  LinearConstraints amb = t ? LinearConstraints::all(4) : similitude_lie_algebra(ambient_form(d.ambient));
  rep.lie_ok = independent_subset(basis).size() == basis.size() && basis.size() == rep.computed;
  for (const auto& v : basis) {
    bool in_fixed = (fix * v) == Vector(n);
    bool in_amb = true;
    for (const auto& eq : amb.equations) {
      Vector x(v.begin(), v.begin() + 16);
      if (sgn(dot(eq, x)) != 0) in_amb = false;
    }
    if (!in_fixed || !in_amb) rep.lie_ok = false;
  }
  if (!rep.lie_ok) fail("Lie algebra of xi(H^) differs from the fixed space");

  Sampler rng(seed);
  std::vector<DualElement> pts;
  rep.group_ok = true;
  for (int k = 0; k < samples; ++k) {
    DualElement e = xi_sample(d, rng);
    if (d.gram) {
      auto mu = similitude_factor(*d.gram, e.g);
      if (!mu || *mu != e.x || determinant(e.g) != (*mu) * (*mu)) rep.group_ok = false;
    }
    if (!fixed_by_datum(d, e)) rep.group_ok = false;
    pts.push_back(e);
  }
  if (!rep.group_ok) fail("sampled xi(H^) element not fixed");

  if (d.frobenius) {
    const Matrix& c = *d.frobenius;
    bool ok = (c * c).is_identity();
    if (!t && !similitude_factor(ambient_form(d.ambient), c)) ok = false;
    // c centralises s up to the centre (ordinary) or lies in the twisted centraliser
    if (t && !fixed_by_datum(d, {c, 1})) ok = false;
    if (!t && !(c * d.s.g * inverse(c) * inverse(d.s.g)).is_scalar()) ok = false;
    // normalises: conjugation keeps the Lie basis inside its span
    for (const auto& v : basis) {
      Matrix x = unvec(Vector(v.begin(), v.begin() + 16), 4, 4);
      Vector w = lie_coords(c * x * c, t ? v[16] : Rational(0), t);
      if (!coordinates(basis, w)) ok = false;
    }
    for (const auto& e : pts)
      if (!fixed_by_datum(d, {c * e.g * c, e.x})) ok = false;
    rep.frobenius_ok = ok;
    if (!ok) fail("Frobenius image does not normalise xi(H^)");
  }
  return rep;
}

AlphaRecovery recover_alpha(const Matrix& g, const Rational& x, const std::vector<std::string>& declared) {
  if (determinant(g) == x * x) return {true, "1"};
  std::string token;
  int count = 0;
  for (const auto& c : declared)
    if (c != "1") {
      token = c;
      ++count;
    }
  if (count != 1) throw std::invalid_argument("non-split element but no unique nontrivial class declared");
  return {false, token};
}

namespace {

std::size_t pair_index(std::size_t p, std::size_t q) {
  static constexpr std::size_t idx[4][4] = {{9, 0, 1, 2}, {0, 9, 3, 4}, {1, 3, 9, 5}, {2, 4, 5, 9}};
  return idx[p][q];
}

// e_p ^ e_q in the ordered bivector basis
Vector wedge(std::size_t p, std::size_t q) {
  Vector v(6);
  if (p == q) return v;
  v[pair_index(p, q)] = p < q ? 1 : -1;
  return v;
}

const Matrix& so4_frame() {
  static const Matrix t = [] {
    const auto& fr = so5_frame();
    const std::size_t a[2] = {0, 3}, b[2] = {1, 2};
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) cols.push_back(*coordinates(fr.complement, wedge(a[i], b[j])));
    Vector w1 = wedge(0, 3), w2 = wedge(1, 2);
    Rational c1 = bilinear(fr.wedge_pairing, fr.omega, w1), c2 = bilinear(fr.wedge_pairing, fr.omega, w2);
    Vector v(6);
    for (std::size_t k = 0; k < 6; ++k) v[k] = c2 * w1[k] - c1 * w2[k];
    cols.push_back(*coordinates(fr.complement, v));
    return Matrix::from_columns(cols);
  }();
  return t;
}

}  // namespace

Matrix h1_to_so4(const Matrix& a, const Matrix& b) {
  Rational da = determinant(a);
  if (da != determinant(b) || sgn(da) == 0) throw std::domain_error("H1 pair needs equal nonzero determinants");
  return kronecker(a, b) * (1 / da);
}

Matrix xi_prime_so4(const Matrix& k) {
  const Matrix& t = so4_frame();
  return t * direct_sum({k, Matrix::identity(1)}) * inverse(t);
}

DiagramReport restriction_diagrams_commute(std::uint64_t seed, int samples) {
  DiagramReport rep;
  rep.samples = samples;
  Sampler rng(seed);
  const auto& fr = so5_frame();
  Matrix qinv = inverse(fr.frame);
  const Matrix ja{{0, -1}, {1, 0}}, jb{{0, 1}, {-1, 0}};
  const Matrix so4_form = kronecker(ja, jb);
  for (int k = 0; k < samples; ++k) {
    // first square, starting from GSp4
    Rational mu;
    Matrix g = k == 0 ? Matrix::identity(4) : random_gsp4(rng, &mu);
    if (k == 0) mu = 1;
    DualElement e{g, mu};
    Matrix pr = project_to_so5(e);
    Matrix f = f_map(e);
    bool ok1 = f == fr.frame * direct_sum({Matrix::identity(1), pr}) * qinv && determinant(f) == 1 &&
               determinant(pr) == 1 && pr.transpose() * fr.gram5 * pr == fr.gram5;
    if (ok1)
      ++rep.first_square_ok;
    else if (rep.failure.empty())
      rep.failure = "first square, sample " + std::to_string(k);

    // second square, starting from H1^
    Matrix a = k == 0 ? Matrix::identity(2) : random_gl2(rng);
    Matrix b = k == 0 ? Matrix::identity(2)
                      : random_sl2(rng) * Matrix::diagonal({determinant(a), 1}) * random_sl2(rng);
    Matrix so4 = h1_to_so4(a, b);
    bool in_so4 = determinant(so4) == 1 && so4.transpose() * so4_form * so4 == so4_form;
    Matrix path_a = project_to_so5(embed_h1(a, b));
    Matrix path_b = xi_prime_so4(so4);
    if (in_so4 && path_a == path_b)
      ++rep.second_square_ok;
    else if (rep.failure.empty())
      rep.failure = "second square, sample " + std::to_string(k);
  }
  return rep;
}

}  // namespace gsp4
