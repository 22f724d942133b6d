#include <doctest.h>

#include "gsp4/fixtures.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/weyl.hpp"
#include "helpers.hpp"

using namespace gsp4;

namespace {

std::vector<std::string> levi_names(const GroupTag& g) {
  std::vector<std::string> out;
  for (const auto& l : enumerate_levis(g)) out.push_back(l.str());
  return out;
}

LeviDescriptor levi_with(const GroupTag& g, std::vector<int> blocks, bool outer = false) {
  for (const auto& l : enumerate_levis(g))
    if (l.blocks == blocks && l.outer_copy_flag == outer) return l;
  FAIL("no such Levi");
  throw std::logic_error("unreachable");
}

TwistedWeylElement element(const LeviDescriptor& l, std::vector<SizeClass> classes, bool theta0 = true) {
  return TwistedWeylElement{l, std::move(classes), theta0};
}

}  // namespace

TEST_CASE("Levi lists") {
  CHECK(levi_names(GroupTag::gspin_odd(2)) ==
        std::vector<std::string>{"GSpin5", "GL1 x GSpin3", "GL2 x GSpin1", "GL1 x GL1 x GSpin1"});
  CHECK(levi_names(GroupTag::gspin_even(2)) ==
        std::vector<std::string>{"GSpin4", "GL2 x GSpin0", "GL2 x GSpin0 (outer)", "GL1 x GL1 x GSpin0"});
  CHECK(levi_names(GroupTag::gspin_even(2, "a")) == std::vector<std::string>{"GSpin4^a", "GL1 x GSpin2^a"});
  CHECK(levi_names(GroupTag::gl_gl1(4)).size() == 5);
  CHECK(levi_names(GroupTag::sp_gl1(2)).size() == 4);
  CHECK_THROWS_AS(enumerate_levis(GroupTag::gspin_odd(5)), std::invalid_argument);

  LeviDescriptor bad{GroupTag::gspin_even(2), {1}, 1, false};
  CHECK_THROWS_AS(validate_levi(bad), std::invalid_argument);
  LeviDescriptor nonsplit{GroupTag::gspin_even(2, "a"), {2}, 0, false};
  CHECK_THROWS_AS(validate_levi(nonsplit), std::invalid_argument);
}

TEST_CASE("Levi lists satisfy the constraints and include G") {
  for (const auto& g : {GroupTag::gl_gl1(4), GroupTag::gspin_even(2), GroupTag::gspin_even(3), GroupTag::gspin_odd(2),
                        GroupTag::gspin_odd(3), GroupTag::sp_gl1(2), GroupTag::gspin_even(4, "a")}) {
    bool has_full = false;
    for (const auto& l : enumerate_levis(g)) {
      CHECK_NOTHROW(validate_levi(l));
      has_full = has_full || l.is_full();
    }
    CHECK(has_full);
  }
}

TEST_CASE("regularity examples") {
  const auto gl = levi_with(GroupTag::gl_gl1(4), {2, 2});
  CHECK(is_regular(element(gl, {{2, {0, 1}, {}}})));
  CHECK_FALSE(is_regular(element(gl, {{2, {1, 0}, {}}})));
  const auto gs = levi_with(GroupTag::gspin_odd(2), {1});
  CHECK(is_regular(element(gs, {{1, {0}, {-1}}})));
  CHECK_FALSE(is_regular(element(gs, {{1, {0}, {1}}})));
}

TEST_CASE("det factors") {
  // theta0 on GL2 x GL2: e_i -> -e_i + z on a_L = <e1, e2, z>, modulo <z, e1 + e2>:
  // the quotient is spanned by e1 - e2 with eigenvalue -1, so det(w - 1) = -2
  const auto gl = levi_with(GroupTag::gl_gl1(4), {2, 2});
  CHECK(det_factor(element(gl, {{2, {0, 1}, {}}})) == 2);
  CHECK(det_w_minus_one(element(gl, {{2, {0, 1}, {}}})) == -2);
  CHECK_THROWS_AS(det_factor(element(gl, {{2, {1, 0}, {}}})), std::domain_error);

  // single sign flip: |(-1) - 1| = 2
  const auto gs = levi_with(GroupTag::gspin_odd(2), {1});
  CHECK(det_factor(element(gs, {{1, {0}, {-1}}})) == 2);

  // GL1 x GL1 x GSpin1: -I gives det 4; a signed swap [[0, 1], [-1, 0]] gives 2
  const auto t = levi_with(GroupTag::gspin_odd(2), {1, 1});
  CHECK(det_factor(element(t, {{1, {0, 1}, {-1, -1}}})) == 4);
  CHECK(det_factor(element(t, {{1, {1, 0}, {-1, 1}}})) == 2);
}

TEST_CASE("regular iff det(w - 1) != 0, exhaustively") {
  for (const auto& g : {GroupTag::gl_gl1(4), GroupTag::gspin_even(2), GroupTag::gspin_even(2, "a"),
                        GroupTag::gspin_odd(2), GroupTag::sp_gl1(2), GroupTag::gspin_odd(3), GroupTag::gspin_even(3)}) {
    for (const auto& l : enumerate_levis(g))
      for (const auto& w : enumerate_weyl(l)) {
        CHECK(is_valid(w));
        CHECK_MESSAGE(is_regular(w) == !is_zero(det_w_minus_one(w)), w.str());
      }
  }
}

TEST_CASE("index two for even GSpin with odd blocks") {
  const auto l = levi_with(GroupTag::gspin_even(2), {1, 1});
  CHECK(enumerate_weyl(l).size() == 4);
  CHECK_FALSE(is_valid(element(l, {{1, {0, 1}, {-1, 1}}})));
  CHECK(is_valid(element(l, {{1, {0, 1}, {-1, -1}}})));
}

TEST_CASE("fixed point condition") {
  CharacterGroup cg = fixture_characters();
  const Character chi = cg.get("chi");
  CuspidalHandle pi{"pi", 2, chi, chi, -1, {}, {}, {}};
  CuspidalHandle other{"rho", 2, chi, cg.get("mu"), -1, {}, {}, {}};
  const auto gl = levi_with(GroupTag::gl_gl1(4), {2, 2});
  CHECK(fixed_point_condition(element(gl, {{2, {0, 1}, {}}}), {pi, pi}, chi));
  CHECK_FALSE(fixed_point_condition(element(gl, {{2, {0, 1}, {}}}), {pi, other}, chi));
  CuspidalHandle pi2 = pi;
  pi2.id = "pi2";
  CHECK_FALSE(fixed_point_condition(element(gl, {{2, {1, 0}, {}}}), {pi, pi2}, chi));
  CHECK(fixed_point_condition(element(gl, {{2, {1, 0}, {}}}), {pi, pi}, chi));
  const auto full = levi_with(GroupTag::gspin_odd(2), {});
  CHECK(fixed_point_condition(element(full, {}), {}, chi));
  CHECK_THROWS_AS(fixed_point_condition(element(gl, {{2, {0, 1}, {}}}), {pi}, chi), std::invalid_argument);
}

TEST_CASE("dual Levi embedding") {
  const auto l = levi_with(GroupTag::gspin_odd(2), {2});
  DualElement id = dual_levi_embed(l, {Matrix::identity(2)}, DualElement{Matrix(0, 0), 1});
  CHECK(id.g.is_identity());

  const Matrix j = gsp4::testing::literal_j4();
  Matrix g{{1, 2}, {3, 5}};
  const Rational lambda = 7;
  DualElement e = dual_levi_embed(l, {g}, DualElement{Matrix(0, 0), lambda});
  CHECK(e.g.block(0, 0, 2, 2) == g);
  CHECK(e.g.transpose() * j * e.g == j * lambda);
  CHECK_THROWS_AS(dual_levi_embed(l, {Matrix{{1, 1}, {1, 1}}}, DualElement{Matrix(0, 0), 1}), std::domain_error);
  CHECK_THROWS_AS(dual_levi_embed(l, {Matrix::identity(3)}, DualElement{Matrix(0, 0), 1}), std::invalid_argument);
}

TEST_CASE("dual Levi embedding lands in the dual group") {
  Sampler rng(6);
  for (const auto& g : {GroupTag::gspin_odd(2), GroupTag::gspin_even(2), GroupTag::sp_gl1(2)}) {
    const Matrix form = dual_form(g);
    for (const auto& l : enumerate_levis(g)) {
      if (l.is_full()) continue;
      std::vector<Matrix> factors;
      for (int b : l.blocks) factors.push_back(gsp4::testing::random_invertible(rng, static_cast<std::size_t>(b)));
      const bool sp = g.kind == GroupKind::SpGL1;
      const Rational mu = sp ? Rational(1) : rng.nonzero_rational(3);
      // middle factor: GSp_{2m} (similitude det for m = 1), GSO_{2m}, or SO_{2m+1}
      DualElement h{Matrix::identity(sp ? 2 * l.m + 1 : 2 * l.m), sp ? rng.nonzero_rational(3) : mu};
      if (g.kind == GroupKind::GSpinOdd && l.m == 1) h.g = Matrix::diagonal({mu, 1});
      DualElement e = dual_levi_embed(l, factors, h);
      CHECK_MESSAGE(similitude_factor(form, e.g) == mu, l.str());
    }
  }
}
