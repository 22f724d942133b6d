#include <doctest.h>

#include "gsp4/fixtures.hpp"
#include "gsp4/involutions.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/sampling.hpp"

using namespace gsp4;

TEST_CASE("identity and scalars") {
  const Matrix b = Matrix::antidiagonal(4);
  SimilitudeElement e = make_similitude(b, Matrix::identity(4));
  InvolutionPair p = factor(e);
  CHECK(p.x.is_identity());
  CHECK(p.y.is_identity());
  CHECK(verify(e, p));

  SimilitudeElement s = make_similitude(b, Matrix::scalar(4, 5));
  CHECK(s.nu == 25);
  InvolutionPair q = factor(s);
  CHECK(q.x.is_identity());
  CHECK(q.y == Matrix::scalar(4, 5));
  CHECK(verify(s, q));
}

TEST_CASE("hand-built pair on a hyperbolic plane") {
  // B = antidiag(1, 1), g = diag(3, 2): nu = 6 = det g; x swaps the isotropic lines
  const Matrix b = Matrix::antidiagonal(2);
  SimilitudeElement e = make_similitude(b, Matrix::diagonal({3, 2}));
  CHECK(e.nu == 6);
  InvolutionPair p{Matrix{{0, 1}, {1, 0}}, Matrix{{0, 2}, {3, 0}}};
  CHECK(verify(e, p));
  // x not orthogonal for the form
  InvolutionPair bad{Matrix{{1, 0}, {0, -1}}, Matrix::diagonal({3, -2})};
  CHECK_FALSE(verify(e, bad));
  CHECK(verify(e, factor(e)));
}

TEST_CASE("make_similitude rejects GO \\ GSO and non-similitudes") {
  const Matrix b = Matrix::diagonal({1, 1, 1, 1});
  CHECK_THROWS_AS(make_similitude(b, Matrix::diagonal({-1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(make_similitude(b, Matrix::diagonal({2, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(make_similitude(Matrix::diagonal({1, 1, 1}), Matrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(make_similitude(Matrix{{1, 1}, {1, 1}}, Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("non-square similitude factor") {
  // rotation-scaling by 1 + i on the sum of two squares: nu = 2
  const Matrix r{{1, 1}, {-1, 1}};
  for (const Matrix& b : {Matrix::identity(2), Matrix::identity(4)}) {
    const Matrix g = b.rows() == 2 ? r : direct_sum({r, r});
    SimilitudeElement e = make_similitude(b, g);
    CHECK(e.nu == 2);
    CHECK(verify(e, factor(e)));
  }
}

TEST_CASE("unipotent decomposition") {
  const Matrix b = Matrix::antidiagonal(4);
  auto one = unipotent_sl2_decompose(Matrix::identity(4), b);
  REQUIRE(one.size() == 1);
  CHECK(one[0].d == 1);
  CHECK(one[0].top.size() == 4);

  // N skew for B with N^2 != 0, N^3 = 0
  Matrix n{{0, 1, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, -1}, {0, 0, 0, 0}};
  REQUIRE((n.transpose() * b + b * n).is_zero());
  Matrix u = Matrix::identity(4) + n + n * n * Rational(1, 2);
  CHECK(unipotent_log(u) == n);
  auto blocks = unipotent_sl2_decompose(u, b);
  std::size_t total = 0;
  for (const auto& blk : blocks) {
    total += static_cast<std::size_t>(blk.d) * blk.top.size();
    CHECK(blk.alternating == (blk.d % 2 == 0));
    CHECK(invertible(blk.pairing));
    CHECK(blk.pairing.transpose() == (blk.alternating ? -blk.pairing : blk.pairing));
  }
  CHECK(total == 4);

  CHECK_THROWS_AS(unipotent_sl2_decompose(Matrix::scalar(4, 2), b), std::invalid_argument);
  for (int lambda : {1, -1, 3}) {
    SimilitudeElement e = make_similitude(b, u * Rational(lambda));
    CHECK(verify(e, factor(e)));
  }
}

TEST_CASE("factor(-g) and the sign swap") {
  Sampler rng(31);
  for (int i = 0; i < 20; ++i) {
    const Matrix b = gso_test_form(4, i % 3);
    SimilitudeElement e = make_similitude(b, random_gso(rng, b));
    InvolutionPair p = factor(e);
    CHECK(verify(e, p));
    SimilitudeElement neg = make_similitude(b, -e.g);
    CHECK(verify(neg, InvolutionPair{p.x, -p.y}));
    CHECK(verify(neg, factor(neg)));
  }
}

TEST_CASE("seeded GSO elements factor") {
  Sampler rng(77);
  for (std::size_t dim : {2, 4, 6}) {
    for (int i = 0; i < 20; ++i) {
      const Matrix b = gso_test_form(dim, i % 3);
      SimilitudeElement e = make_similitude(b, random_gso(rng, b));
      InvolutionPair p = factor(e);
      CHECK(verify(e, p));
      CHECK(determinant(p.x) == (dim % 4 == 0 ? 1 : -1));
    }
  }
}
