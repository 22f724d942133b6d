#include "gsp4/sampling.hpp"

#include <stdexcept>

#include "gsp4/dualgroups.hpp"

namespace gsp4 {

long Sampler::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection to stay unbiased
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t r;
  do r = eng_();
  while (r >= limit);
  return lo + static_cast<long>(r % span);
}

long Sampler::nonzero_integer(long bound) {
  long v = integer(1, bound);
  return coin() ? v : -v;
}

Rational Sampler::rational(long bound) {
  Rational r(integer(-bound, bound), integer(1, bound));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(long bound) {
  Rational r(nonzero_integer(bound), integer(1, bound));
  r.canonicalize();
  return r;
}

Vector Sampler::vector(std::size_t n, long bound) {
  Vector v(n);
  for (auto& x : v) x = integer(-bound, bound);
  return v;
}

Matrix transvection(const Matrix& alt, const Vector& v, const Rational& c) {
  const std::size_t n = alt.rows();
  Vector av = alt * v;
  Matrix t = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) += c * v[i] * av[j];
  return t;
}

Matrix reflection(const Matrix& sym, const Vector& v) {
  Rational q = bilinear(sym, v, v);
  if (sgn(q) == 0) throw std::domain_error("reflection in an isotropic vector");
  const std::size_t n = sym.rows();
  Vector bv = sym * v;
  Matrix r = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2 * v[i] * bv[j] / q;
  return r;
}

Matrix random_gsp4(Sampler& rng, Rational* similitude) {
  const Matrix j = j_matrix(4);
  Rational t1 = rng.nonzero_rational(3), t2 = rng.nonzero_rational(3), l = rng.nonzero_rational(4);
  Matrix g = Matrix::diagonal({t1, t2, l / t2, l / t1});
  for (int k = 0; k < 3; ++k) {
    Vector v = rng.vector(4, 2);
    g = transvection(j, v, rng.nonzero_rational(2)) * g;
  }
  if (similitude) *similitude = l;
  return g;
}

Matrix random_reflections(Sampler& rng, const Matrix& sym, int count) {
  Matrix g = Matrix::identity(sym.rows());
  for (int k = 0; k < count; ++k) {
    Vector v;
    do v = rng.vector(sym.rows(), 3);
    while (sgn(bilinear(sym, v, v)) == 0);
    g = reflection(sym, v) * g;
  }
  return g;
}

Matrix random_gso(Sampler& rng, const Matrix& sym, Rational* nu) {
  const long half = static_cast<long>(sym.rows() / 2);
  const int count = 2 * static_cast<int>(rng.integer(0, half));
  Rational lambda = rng.nonzero_rational(3);
  if (nu) *nu = lambda * lambda;
  return random_reflections(rng, sym, count) * lambda;
}

}  // namespace gsp4
