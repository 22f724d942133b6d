#include <doctest.h>

#include <algorithm>

#include "gsp4/fixtures.hpp"
#include "gsp4/oracle.hpp"
#include "gsp4/params.hpp"

using namespace gsp4;

namespace {

CuspidalHandle handle(const CharacterGroup& cg, const std::string& id, int n, const Character& central, int sign) {
  CuspidalHandle h;
  h.id = id;
  h.N = n;
  h.central = central;
  h.chi = cg.get("chi");
  h.sign = sign;
  return h;
}

FormalParameter param(const CharacterGroup& cg, std::vector<Summand> s) {
  FormalParameter p;
  p.chi = cg.get("chi");
  p.summands = std::move(s);
  return p;
}

const GroupTag kGSpin5 = GroupTag::gspin_odd(2);

}  // namespace

TEST_CASE("character group") {
  CharacterGroup cg = fixture_characters();
  CHECK(cg.is_trivial(cg.pow(cg.get("a"), 2)));
  CHECK(cg.is_quadratic(cg.get("a")));
  CHECK(cg.has_square_root(cg.get("chi")));
  CHECK_FALSE(cg.has_square_root(cg.get("mu")));
  CHECK(cg.str(cg.mul(cg.get("chi"), cg.get("a"))) == "a*mu^2");
  CHECK(cg.class_token(cg.mul(cg.get("a"), cg.get("b"))) == "a*b");
  CHECK_THROWS_AS(cg.get("nu"), std::invalid_argument);
}

TEST_CASE("handle validation") {
  CharacterGroup cg = fixture_characters();
  CHECK_NOTHROW(validate_handle(cg, handle(cg, "pi", 2, cg.get("chi"), -1)));
  CHECK_THROWS_AS(validate_handle(cg, handle(cg, "pi", 2, cg.get("mu"), -1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_handle(cg, handle(cg, "eta", 1, cg.get("mu"), -1)), std::invalid_argument);
}

TEST_CASE("GL2 alternative") {
  CharacterGroup cg = fixture_characters();
  const Character chi = cg.get("chi");
  CHECK(gl2_alternative(cg, handle(cg, "pi", 2, chi, 1), chi).symplectic);
  Gl2Alternative o = gl2_alternative(cg, handle(cg, "pi", 2, cg.mul(chi, cg.get("a")), 1), chi);
  CHECK_FALSE(o.symplectic);
  CHECK(o.dihedral_class == "a");
  CHECK(o.handle.dihedral_from == "a");
  CHECK(o.handle.sign == 1);

  CharacterGroup plain;
  plain.declare_class("a");
  CuspidalHandle h{"pi", 2, plain.trivial(), plain.trivial(), 1, {}, {}, {}};
  CHECK(gl2_alternative(plain, h, plain.trivial()).symplectic);
  CHECK_THROWS_AS(gl2_alternative(cg, handle(cg, "pi", 2, cg.get("mu"), 1), chi), std::invalid_argument);
}

TEST_CASE("GL4 alternative") {
  CharacterGroup cg = fixture_characters();
  const Character chi = cg.get("chi"), chi2 = cg.pow(chi, 2);
  CuspidalHandle t = handle(cg, "Pi", 4, chi2, 1);
  t.tensor_origin = TensorOrigin{"p1", "p2", cg.get("mu"), cg.get("mu")};
  CHECK(gl4_alternative(cg, t, chi).which == Gl4Case::Tensor);

  Gl4Alternative asai = gl4_alternative(cg, handle(cg, "Pi", 4, cg.mul(chi2, cg.get("a")), 1), chi);
  CHECK(asai.which == Gl4Case::Asai);
  CHECK(asai.asai_class == "a");

  Gl4Alternative sp = gl4_alternative(cg, handle(cg, "Pi", 4, chi2, 1), chi);
  CHECK(sp.which == Gl4Case::Symplectic);
  CHECK(sp.handle.sign == -1);

  t.central = cg.mul(chi2, cg.get("a"));
  CHECK_THROWS_AS(gl4_alternative(cg, t, chi), std::invalid_argument);
}

TEST_CASE("boxtimes") {
  CharacterGroup cg;
  cg.declare_basis("mu", 0);
  cg.declare_basis("nu", 0);
  cg.define("chi", {{"mu", 1}});
  CuspidalHandle eta{"eta", 1, cg.get("mu"), cg.pow(cg.get("mu"), 2), 1, {}, {}, {}};
  CuspidalHandle eta2{"eta2", 1, cg.get("nu"), cg.pow(cg.get("nu"), 2), 1, {}, {}, {}};
  CuspidalHandle pi{"pi", 2, cg.get("nu"), cg.get("nu"), -1, {}, {}, {}};

  FormalParameter a = boxtimes(cg, {eta, 2}, {pi, 1});
  REQUIRE(a.summands.size() == 1);
  CHECK(a.summands[0].d == 2);
  CHECK(a.summands[0].pi.N == 2);
  CHECK(a.summands[0].pi.central == cg.mul(cg.pow(cg.get("mu"), 2), cg.get("nu")));

  FormalParameter b = boxtimes(cg, {eta, 2}, {eta2, 2});
  REQUIRE(b.summands.size() == 2);
  CHECK(b.summands[0].pi.id == b.summands[1].pi.id);
  CHECK(b.summands[0].d == 1);
  CHECK(b.summands[1].d == 3);
  CHECK(b.summands[0].pi.central == cg.mul(cg.get("mu"), cg.get("nu")));

  CuspidalHandle pi2{"pi2", 2, cg.get("mu"), cg.get("mu"), -1, {}, {}, {}};
  FormalParameter c = boxtimes(cg, {pi, 1}, {pi2, 1});
  REQUIRE(c.summands.size() == 1);
  CHECK(c.summands[0].pi.N == 4);
  CHECK(c.summands[0].pi.tensor_origin.has_value());
  CHECK(c.size() == 4);
}

TEST_CASE("membership in Psi_disc") {
  CharacterGroup cg = fixture_characters();
  const Character chi = cg.get("chi");
  auto yoshida = param(cg, {{handle(cg, "pi1", 2, chi, -1), 1}, {handle(cg, "pi2", 2, chi, -1), 1}});
  CHECK(psi_disc_membership(cg, yoshida, kGSpin5).member);
  auto soudry = type_fixtures(cg)[2].psi;
  CHECK(psi_disc_membership(cg, soudry, kGSpin5).member);
  auto doubled = param(cg, {{handle(cg, "pi1", 2, chi, -1), 1}, {handle(cg, "pi1", 2, chi, -1), 1}});
  Membership m = psi_disc_membership(cg, doubled, kGSpin5);
  CHECK_FALSE(m.member);
  CHECK(m.reason.find("discrete") != std::string::npos);
  auto wrong_sign = param(cg, {{handle(cg, "pi1", 2, chi, 1), 1}, {handle(cg, "pi2", 2, chi, -1), 1}});
  CHECK_FALSE(psi_disc_membership(cg, wrong_sign, kGSpin5).member);
  CHECK_THROWS_AS(psi_disc_membership(cg, param(cg, {{handle(cg, "pi1", 2, chi, -1), 1}}), kGSpin5),
                  std::invalid_argument);
  // GSpin4^alpha: prod omega^d / chi^n must be the class character
  CHECK(psi_disc_membership(cg, gspin4_even_fixture(cg), gspin4_even_target()).member);
  CHECK_FALSE(psi_disc_membership(cg, gspin4_even_fixture(cg), GroupTag::gspin_even(2, "a")).member);
}

TEST_CASE("membership does not depend on summand order") {
  CharacterGroup cg = fixture_characters();
  for (const auto& f : type_fixtures(cg)) {
    FormalParameter p = f.psi;
    std::reverse(p.summands.begin(), p.summands.end());
    CHECK(psi_disc_membership(cg, p, kGSpin5).member == psi_disc_membership(cg, f.psi, kGSpin5).member);
    CHECK(classify(p).type == f.type);
  }
}

TEST_CASE("classification table") {
  CharacterGroup cg = fixture_characters();
  const std::vector<std::pair<ArthurType, std::size_t>> table = {
      {ArthurType::GeneralA, 1}, {ArthurType::Yoshida, 2}, {ArthurType::Soudry, 1},
      {ArthurType::SaitoKurokawa, 2}, {ArthurType::HowePS, 2}, {ArthurType::OneDimensional, 1}};
  auto fixtures = type_fixtures(cg);
  REQUIRE(fixtures.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    Classification c = classify(fixtures[i].psi);
    CHECK(c.type == table[i].first);
    CHECK(c.s_group.order() == table[i].second);
    CHECK(c.epsilon == trivial_character(c.s_group));
    CHECK(remark_letter(c.type) == static_cast<char>('a' + i));
  }
  Classification sk = classify(saito_kurokawa_fixture(cg, true));
  CHECK(sk.type == ArthurType::SaitoKurokawa);
  CHECK(sk.epsilon != trivial_character(sk.s_group));
  CHECK(respects_relations(sk.s_group, sk.epsilon));
  // s_psi is the eta[2] summand, which is nontrivial in S_psi
  CHECK(sk.s_group.same(sk.s_psi, Mask{1} << sk.s_group.index("eta[2]")));
  CHECK_FALSE(sk.s_group.is_trivial(sk.s_psi));
  CHECK_THROWS_AS(classify(gspin4_even_fixture(cg)), std::invalid_argument);
}

TEST_CASE("epsilon is a character") {
  CharacterGroup cg = fixture_characters();
  for (const auto& psi : {saito_kurokawa_fixture(cg, true), type_fixtures(cg)[1].psi}) {
    Classification c = classify(psi);
    for (Mask x = 0; x <= c.s_group.all_labels(); ++x)
      for (Mask y = 0; y <= c.s_group.all_labels(); ++y)
        CHECK(evaluate(c.epsilon, x ^ y) == evaluate(c.epsilon, x) * evaluate(c.epsilon, y));
  }
}

TEST_CASE("oracle agrees with the table") {
  CharacterGroup cg = fixture_characters();
  for (std::uint64_t seed : {1u, 2u}) {
    for (const auto& f : type_fixtures(cg)) {
      Classification c = classify(f.psi);
      OracleAgreement a = compare_with_table(component_group_oracle(f.psi, kGSpin5, seed), c.s_group, c.s_psi);
      CHECK_MESSAGE(a.pass(), to_string(f.type) << ": " << a.detail);
    }
  }
  FormalParameter even = gspin4_even_fixture(cg);
  OracleResult o = component_group_oracle(even, gspin4_even_target());
  CHECK(compare_with_table(o, s_group_table(even, gspin4_even_target()), s_psi_mask(even)).pass());
  CHECK_THROWS_AS(component_group_oracle(even, GroupTag::gl_gl1(4)), std::invalid_argument);
}

TEST_CASE("m_psi") {
  CharacterGroup cg = fixture_characters();
  CHECK(m_psi(gspin4_even_fixture(cg), gspin4_even_target()) == 2);
  for (const auto& f : type_fixtures(cg)) CHECK(m_psi(f.psi, kGSpin5) == 1);
  // an N = 1 summand on GSpin4
  auto mixed = param(cg, {{handle(cg, "eta1", 1, cg.get("mu"), 1), 1},
                          {handle(cg, "eta2", 1, cg.mul(cg.get("mu"), cg.get("a")), 1), 3}});
  CHECK(m_psi(mixed, GroupTag::gspin_even(2, "a")) == 1);
}

TEST_CASE("multiplicity examples") {
  CharacterGroup cg = fixture_characters();
  FormalParameter yoshida = type_fixtures(cg)[1].psi;
  TwoGroup g = s_group_table(yoshida, kGSpin5);
  TwoGroupCharacter sgn{{-1, -1}};
  CHECK(multiplicity(yoshida, kGSpin5, {{"v1", sgn}, {"v2", sgn}}) == 1);
  CHECK(multiplicity(yoshida, kGSpin5, {{"v1", sgn}}) == 0);
  CHECK(multiplicity(yoshida, kGSpin5, {}) == 1);
  CHECK_THROWS_AS(multiplicity(yoshida, kGSpin5, {{"v1", TwoGroupCharacter{{1, -1}}}}), std::invalid_argument);
  FormalParameter sk = saito_kurokawa_fixture(cg, true);
  CHECK(multiplicity(sk, kGSpin5, {}) == 0);
  CHECK(multiplicity(sk, kGSpin5, {{"v", trivial_character(s_group_table(sk, kGSpin5))}}) == 0);
}

TEST_CASE("multiplicity: half of all sign patterns are automorphic") {
  CharacterGroup cg = fixture_characters();
  for (const auto& psi : {type_fixtures(cg)[1].psi, type_fixtures(cg)[4].psi, saito_kurokawa_fixture(cg, true)}) {
    TwoGroup g = s_group_table(psi, kGSpin5);
    auto chars = all_characters(g);
    REQUIRE(chars.size() == 2);
    for (int k = 1; k <= 4; ++k) {
      int total = 0;
      for (unsigned p = 0; p < (1u << k); ++p) {
        std::vector<LocalDatum> local;
        for (int v = 0; v < k; ++v) local.push_back({std::to_string(v), chars[p >> v & 1]});
        const int m = multiplicity(psi, kGSpin5, local);
        CHECK((m == 0 || m == m_psi(psi, kGSpin5)));
        total += m;
      }
      CHECK(total == (1 << (k - 1)) * m_psi(psi, kGSpin5));
    }
  }
}

TEST_CASE("std_compose") {
  CharacterGroup cg = fixture_characters();
  FormalParameter general = type_fixtures(cg)[0].psi;
  auto out = std_compose(general, {{"Pi", Matrix::diagonal({1, 2, 3, 4})}}, 5);
  REQUIRE(out.entries.size() == 4);
  for (const auto& m : out.entries) CHECK(m.q_exp == 0);
  CHECK(out.gl1 == 5);

  FormalParameter one_dim = type_fixtures(cg)[5].psi;
  FormalParameter eta2 = param(cg, {{one_dim.summands[0].pi, 2}});
  auto e = std_compose(eta2, {{"eta", Matrix::diagonal({7})}}, 1);
  REQUIRE(e.entries.size() == 2);
  CHECK(e.entries[0] == Monomial{7, -1});
  CHECK(e.entries[1] == Monomial{7, 1});

  FormalParameter yoshida = type_fixtures(cg)[1].psi;
  auto y = std_compose(yoshida, {{"pi1", Matrix::diagonal({1, 2})}, {"pi2", Matrix::diagonal({3, 4})}}, 1);
  CHECK(y.entries.size() == 4);
  CHECK_THROWS_AS(std_compose(yoshida, {{"pi1", Matrix::diagonal({1, 2})}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(std_compose(yoshida, {{"pi1", Matrix::diagonal({1})}, {"pi2", Matrix::diagonal({3, 4})}}, 1),
                  std::invalid_argument);
}

TEST_CASE("two-groups") {
  TwoGroup g({"x", "y", "z"}, {0b011});
  CHECK(g.order() == 4);
  CHECK(g.same(0b001, 0b010));
  CHECK(g.describe(0b011) == "1");
  CHECK(all_characters(g).size() == 4);
  for (const auto& c : all_characters(g)) CHECK(c.values[0] == c.values[1]);
  CHECK_THROWS_AS(g.index("w"), std::out_of_range);
}

TEST_CASE("oracle agrees with the table for every seed") {
  const CharacterGroup cg = fixture_characters();
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    CAPTURE(seed);
    for (const auto& f : type_fixtures(cg)) {
      Classification c = classify(f.psi);
      CHECK(compare_with_table(component_group_oracle(f.psi, GroupTag::gspin_odd(2), seed), c.s_group, c.s_psi).pass());
    }
  }
}
