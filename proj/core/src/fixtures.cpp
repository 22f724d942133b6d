#include "gsp4/fixtures.hpp"

#include <stdexcept>

namespace gsp4 {

CharacterGroup fixture_characters() {
  CharacterGroup cg;
  cg.declare_basis("mu", 0);
  cg.declare_class("a");
  cg.declare_class("b");
  cg.define("chi", {{"mu", 2}});
  return cg;
}

namespace {

CuspidalHandle handle(const CharacterGroup& cg, std::string id, int n, const Character& central, int sign) {
  CuspidalHandle h;
  h.id = std::move(id);
  h.N = n;
  h.central = central;
  h.chi = cg.get("chi");
  h.sign = sign;
  validate_handle(cg, h);
  return h;
}

FormalParameter param(const CharacterGroup& cg, std::vector<Summand> s) {
  FormalParameter p;
  p.chi = cg.get("chi");
  p.summands = std::move(s);
  return p;
}

CuspidalHandle dihedral(const CharacterGroup& cg, const std::string& id, const std::string& cls) {
  CuspidalHandle h = handle(cg, id, 2, cg.mul(cg.get("chi"), cg.get(cls)), 1);
  h.dihedral_from = cls;
  return h;
}

}  // namespace

FormalParameter saito_kurokawa_fixture(const CharacterGroup& cg, bool root_number_negative) {
  const Character chi = cg.get("chi");
  auto p = param(cg, {{handle(cg, "pi", 2, chi, -1), 1}, {handle(cg, "eta", 1, cg.get("mu"), 1), 2}});
  p.root_number_negative = root_number_negative;
  return p;
}

std::vector<TypeFixture> type_fixtures(const CharacterGroup& cg) {
  const Character chi = cg.get("chi"), mu = cg.get("mu");
  const Character mu_a = cg.mul(mu, cg.get("a"));
  std::vector<TypeFixture> out;
  out.push_back({ArthurType::GeneralA, param(cg, {{handle(cg, "Pi", 4, cg.pow(chi, 2), -1), 1}})});
  out.push_back({ArthurType::Yoshida,
                 param(cg, {{handle(cg, "pi1", 2, chi, -1), 1}, {handle(cg, "pi2", 2, chi, -1), 1}})});
  out.push_back({ArthurType::Soudry, param(cg, {{dihedral(cg, "tau", "a"), 2}})});
  out.push_back({ArthurType::SaitoKurokawa, saito_kurokawa_fixture(cg, false)});
  out.push_back({ArthurType::HowePS,
                 param(cg, {{handle(cg, "eta1", 1, mu, 1), 2}, {handle(cg, "eta2", 1, mu_a, 1), 2}})});
  out.push_back({ArthurType::OneDimensional, param(cg, {{handle(cg, "eta", 1, mu, 1), 4}})});
  return out;
}

FormalParameter gspin4_even_fixture(const CharacterGroup& cg) {
  return param(cg, {{dihedral(cg, "pi1", "a"), 1}, {dihedral(cg, "pi2", "b"), 1}});
}

GroupTag gspin4_even_target() { return GroupTag::gspin_even(2, "a*b"); }

Matrix gso_test_form(std::size_t dim, int variant) {
  static const long kIndefinite[] = {1, -1, 2, -3, 5, -6, 7, -2};
  static const long kDefinite[] = {1, 2, 3, 5, 6, 7, 10, 11};
  switch (variant) {
    case 0: return Matrix::antidiagonal(dim);
    case 1:
    case 2: {
      Vector d;
      for (std::size_t i = 0; i < dim; ++i) d.push_back(variant == 1 ? kIndefinite[i % 8] : kDefinite[i % 8]);
      return Matrix::diagonal(d);
    }
  }
  throw std::invalid_argument("unknown form variant");
}

}  // namespace gsp4
