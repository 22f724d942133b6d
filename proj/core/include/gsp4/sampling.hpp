#pragma once

#include <cstdint>
#include <random>

#include "gsp4/matrix.hpp"

namespace gsp4 {

// Seeded source of small rational test points. mt19937_64 is fully specified by the
// standard; the reductions below avoid the implementation-defined distributions so that
// sample streams are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi);  // uniform in [lo, hi]
  long nonzero_integer(long bound);  // in [-bound, bound] \ {0}
  Rational rational(long bound);     // p/q, |p| <= bound, 1 <= q <= bound
  Rational nonzero_rational(long bound);
  Vector vector(std::size_t n, long bound);
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

// w -> w + c <w, v> v with <w, v> = w^T A v, A alternating. Preserves A.
Matrix transvection(const Matrix& alt, const Vector& v, const Rational& c);
// w -> w - 2 B(w, v) / B(v, v) v, B symmetric and B(v, v) != 0.
Matrix reflection(const Matrix& sym, const Vector& v);

// Random element of GSp4 for j_matrix(4): transvections times diag(t1, t2, l/t2, l/t1).
Matrix random_gsp4(Sampler& rng, Rational* similitude = nullptr);
// Product of `count` reflections in random anisotropic vectors.
Matrix random_reflections(Sampler& rng, const Matrix& sym, int count);
// lambda times an even number of reflections: an element of GSO(sym) with nu = lambda^2.
Matrix random_gso(Sampler& rng, const Matrix& sym, Rational* nu = nullptr);

}  // namespace gsp4
