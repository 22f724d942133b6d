#include <doctest.h>

#include "gsp4/dualgroups.hpp"
#include "gsp4/linalg.hpp"
#include "helpers.hpp"

using namespace gsp4;
using gsp4::testing::literal_j4;
using gsp4::testing::random_invertible;

TEST_CASE("group tags") {
  CHECK(parse_group("GSpin5") == GroupTag::gspin_odd(2));
  CHECK(parse_group("GSpin4^a") == GroupTag::gspin_even(2, "a"));
  CHECK(parse_group("Sp4xGL1") == GroupTag::sp_gl1(2));
  CHECK(parse_group("GL4xGL1") == GroupTag::gl_gl1(4));
  CHECK_THROWS_AS(parse_group("SO7"), std::invalid_argument);
  CHECK(sign_of_group(GroupTag::gspin_odd(2)) == -1);
  CHECK(sign_of_group(GroupTag::gspin_even(2)) == 1);
  CHECK(sign_of_group(GroupTag::sp_gl1(2)) == 1);
  CHECK(GroupTag::gspin_odd(2).dual_dim() == 4);
  CHECK(GroupTag::sp_gl1(2).dual_dim() == 5);
  CHECK(j_matrix(4) == literal_j4());
}

TEST_CASE("theta examples") {
  CHECK(apply_theta(DualElement{Matrix::identity(4), 1}) == DualElement{Matrix::identity(4), 1});
  DualElement d{Matrix::diagonal({2, 3, 5, 7}), 1};
  DualElement t = apply_theta(d);
  CHECK(t.g == Matrix::diagonal({Rational(1, 7), Rational(1, 5), Rational(1, 3), Rational(1, 2)}));
  CHECK(t.x == 210);
  CHECK_THROWS_AS(apply_theta(DualElement{Matrix::zero(4, 4), 1}), std::domain_error);
}

TEST_CASE("theta is an involution") {
  Sampler rng(3);
  for (int i = 0; i < 20; ++i) {
    DualElement e{random_invertible(rng, 4), rng.nonzero_rational(4)};
    CHECK(apply_theta(apply_theta(e)) == e);
  }
}

TEST_CASE("fixed points of the dual twist") {
  CHECK(fixed_point_check(DualElement{Matrix::identity(4), 1}));
  const Rational t = 2, lambda = 3;
  CHECK(fixed_point_check(DualElement{Matrix::diagonal({t, t, lambda / t, lambda / t}), lambda}));
  Matrix shear = Matrix::identity(4) + Matrix::unit(4, 0, 1);
  CHECK(shear.transpose() * literal_j4() * shear != literal_j4());
  CHECK_FALSE(fixed_point_check(DualElement{shear, 1}));

  Sampler rng(9);
  for (int i = 0; i < 20; ++i) {
    Rational l;
    Matrix g = i % 2 ? random_gsp4(rng, &l) : random_invertible(rng, 4);
    if (i % 2 == 0) l = 1;
    CHECK(fixed_point_check(DualElement{g, l}) == (g.transpose() * literal_j4() * g == literal_j4() * l));
  }
}

TEST_CASE("standard representations") {
  auto [m, x] = std_rep(GroupTag::gspin_odd(2), DualElement{Matrix::identity(4), 1});
  CHECK(m.is_identity());
  CHECK(x == 1);
  auto [m2, x2] = std_rep(GroupTag::sp_gl1(2), DualElement{Matrix::identity(5), 3});
  CHECK(m2.is_identity());
  CHECK(x2 == 3);
  // centre of GSp4: lambda times the identity, similitude lambda^2
  auto [m3, x3] = std_rep(GroupTag::gspin_odd(2), DualElement{Matrix::scalar(4, 5), 25});
  CHECK(m3 == Matrix::scalar(4, 5));
  CHECK(x3 == 25);
  CHECK_THROWS_AS(std_rep(GroupTag::gspin_odd(2), DualElement{Matrix::scalar(4, 5), 5}), std::domain_error);
}

TEST_CASE("projection to SO5") {
  CHECK(project_to_so5(DualElement{Matrix::identity(4), 1}).is_identity());
  CHECK(project_to_so5(DualElement{Matrix::scalar(4, -2), 4}).is_identity());

  // diag(a, b, l/b, l/a): the bivectors e_i^e_j scale by t_i t_j / l, and e1^e4, e2^e3 by 1;
  // dropping the omega line leaves {ab/l, a/b, 1, b/a, l/(ab)}
  const Rational a = 2, b = 3, l = 5;
  Matrix p = project_to_so5(DualElement{Matrix::diagonal({a, b, l / b, l / a}), l});
  Polynomial expected{1};
  for (const Rational& r : std::vector<Rational>{a * b / l, a / b, Rational(1), b / a, l / (a * b)}) {
    Polynomial next(expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i + 1] += expected[i];
      next[i] -= r * expected[i];
    }
    expected = next;
  }
  CHECK(characteristic_polynomial(p) == expected);

  const Matrix& gram = so5_frame().gram5;
  Sampler rng(21);
  for (int i = 0; i < 10; ++i) {
    Rational l1, l2;
    DualElement e1{random_gsp4(rng, &l1), l1}, e2{random_gsp4(rng, &l2), l2};
    Matrix p1 = project_to_so5(e1);
    CHECK(p1.transpose() * gram * p1 == gram);
    CHECK(determinant(p1) == 1);
    CHECK(project_to_so5(e1 * e2) == p1 * project_to_so5(e2));
    // f fixes omega
    CHECK(f_map(e1) * so5_frame().omega == so5_frame().omega);
  }
  Matrix shear = Matrix::identity(4) + Matrix::unit(4, 0, 1);
  CHECK_THROWS_AS(project_to_so5(DualElement{shear, 1}), std::domain_error);
}

TEST_CASE("pinning") {
  CHECK(pinning_fixed_by_theta().pass);
  CHECK(pinning_fixed_by_theta(-j_matrix(4)).pass);
  PinningReport bad = pinning_fixed_by_theta(Matrix::antidiagonal(4));
  CHECK_FALSE(bad.pass);
  CHECK(bad.failing.find("root") != std::string::npos);
}
