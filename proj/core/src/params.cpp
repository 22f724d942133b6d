#include "gsp4/params.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsp4 {

void validate_handle(const CharacterGroup& cg, const CuspidalHandle& h) {
  auto bad = [&](const std::string& why) { throw std::invalid_argument("handle " + h.id + ": " + why); };
  if (h.id.empty()) throw std::invalid_argument("handle without id");
  if (h.N < 1) bad("N must be positive");
  if (h.sign != 1 && h.sign != -1) bad("sign must be +1 or -1");
  if (cg.pow(h.central, 2) != cg.pow(h.chi, h.N)) bad("omega^2 != chi^N");
  if (h.N % 2 == 1 && !cg.has_square_root(h.chi)) bad("N odd but chi is not a square");
  if (h.N == 1 && h.sign != 1) bad("a character is always of orthogonal type");
  if (h.dihedral_from && h.N != 2) bad("dihedral_from only applies to GL2");
  if ((h.tensor_origin || h.asai_origin) && h.N != 4) bad("tensor/Asai provenance only applies to GL4");
}

int FormalParameter::size() const {
  int s = 0;
  for (const auto& x : summands) s += x.pi.N * x.d;
  return s;
}

std::string FormalParameter::str() const {
  std::string out;
  for (const auto& x : summands) {
    if (!out.empty()) out += " + ";
    out += x.key();
  }
  return out.empty() ? "0" : out;
}

Gl2Alternative gl2_alternative(const CharacterGroup& cg, const CuspidalHandle& pi, const Character& chi) {
  if (pi.N != 2) throw std::invalid_argument("gl2_alternative needs a GL2 handle");
  Gl2Alternative out;
  out.handle = pi;
  Character r = cg.div(pi.central, chi);
  if (cg.is_trivial(r)) {
    out.symplectic = true;
    out.handle.sign = -1;
    out.handle.dihedral_from.reset();
    return out;
  }
  if (!cg.is_quadratic(r))
    throw std::invalid_argument("handle " + pi.id + ": omega/chi is neither trivial nor quadratic");
  out.symplectic = false;
  out.dihedral_class = cg.class_token(r).value_or(cg.str(r));
  out.handle.sign = 1;
  out.handle.dihedral_from = out.dihedral_class;
  return out;
}

std::string to_string(Gl4Case c) {
  switch (c) {
    case Gl4Case::Tensor: return "tensor";
    case Gl4Case::Asai: return "asai";
    case Gl4Case::Symplectic: return "symplectic";
  }
  return "?";
}

Gl4Alternative gl4_alternative(const CharacterGroup& cg, const CuspidalHandle& pi, const Character& chi) {
  if (pi.N != 4) throw std::invalid_argument("gl4_alternative needs a GL4 handle");
  Gl4Alternative out;
  out.handle = pi;
  const Character chi2 = cg.pow(chi, 2);
  if (pi.tensor_origin) {
    if (pi.central != chi2) throw std::invalid_argument("handle " + pi.id + ": tensor origin but omega != chi^2");
    const auto& t = *pi.tensor_origin;
    if (cg.mul(t.omega_first, t.omega_second) == chi) {
      out.which = Gl4Case::Tensor;
      out.handle.sign = 1;
      return out;
    }
  }
  if (pi.central != chi2) {
    Character r = cg.div(chi2, pi.central);
    if (!cg.is_quadratic(r)) throw std::invalid_argument("handle " + pi.id + ": chi^2/omega is not quadratic");
    out.which = Gl4Case::Asai;
    out.asai_class = cg.class_token(r).value_or(cg.str(r));
    out.handle.sign = 1;
    out.handle.asai_origin = out.asai_class;
    return out;
  }
  out.which = Gl4Case::Symplectic;
  out.handle.sign = -1;
  return out;
}

FormalParameter boxtimes(const CharacterGroup& cg, const DiscreteGl2& p1, const DiscreteGl2& p2) {
  auto check = [](const DiscreteGl2& p) {
    if (!((p.pi.N == 2 && p.d == 1) || (p.pi.N == 1 && p.d == 2)))
      throw std::invalid_argument("boxtimes takes a cuspidal GL2 handle or eta[2]");
  };
  check(p1);
  check(p2);
  FormalParameter out;
  out.chi = cg.mul(p1.pi.chi, p2.pi.chi);
  const bool c1 = p1.pi.N == 2, c2 = p2.pi.N == 2;
  if (c1 && c2) {
    CuspidalHandle h;
    h.id = p1.pi.id + "x" + p2.pi.id;
    h.N = 4;
    h.central = cg.mul(cg.pow(p1.pi.central, 2), cg.pow(p2.pi.central, 2));
    h.chi = out.chi;
    h.tensor_origin = TensorOrigin{p1.pi.id, p2.pi.id, p1.pi.central, p2.pi.central};
    h = gl4_alternative(cg, h, out.chi).handle;
    out.summands.push_back({h, 1});
    return out;
  }
  if (!c1 && !c2) {
    CuspidalHandle h;
    h.id = p1.pi.id + "*" + p2.pi.id;
    h.N = 1;
    h.central = cg.mul(p1.pi.central, p2.pi.central);
    h.chi = out.chi;
    h.sign = 1;
    out.summands.push_back({h, 1});
    out.summands.push_back({h, 3});
    return out;
  }
  const DiscreteGl2& eta = c1 ? p2 : p1;
  const DiscreteGl2& pi = c1 ? p1 : p2;
  CuspidalHandle h = pi.pi;
  h.id = eta.pi.id + "*" + pi.pi.id;
  h.central = cg.mul(cg.pow(eta.pi.central, 2), pi.pi.central);
  h.chi = out.chi;
  out.summands.push_back({h, 2});
  return out;
}

namespace {

int dual_size(const GroupTag& t) {
  if (t.kind == GroupKind::GLGL1) throw std::invalid_argument("Psi_disc is defined for GSpin and Sp x GL1 targets");
  return t.dual_dim();
}

std::string pair_key(const Summand& s) { return s.pi.id + "#" + std::to_string(s.d); }

ArthurType detect_type(const FormalParameter& psi) {
  std::vector<std::pair<int, int>> shape;
  for (const auto& s : psi.summands) shape.emplace_back(s.pi.N, s.d);
  std::sort(shape.begin(), shape.end());
  using P = std::vector<std::pair<int, int>>;
  if (shape == P{{4, 1}}) return ArthurType::GeneralA;
  if (shape == P{{2, 1}, {2, 1}}) return ArthurType::Yoshida;
  if (shape == P{{2, 2}}) return ArthurType::Soudry;
  if (shape == P{{1, 2}, {2, 1}}) return ArthurType::SaitoKurokawa;
  if (shape == P{{1, 2}, {1, 2}}) return ArthurType::HowePS;
  if (shape == P{{1, 4}}) return ArthurType::OneDimensional;
  throw std::invalid_argument("parameter " + psi.str() + " is not one of the six GSpin5 shapes");
}

}  // namespace

Membership psi_disc_membership(const CharacterGroup& cg, const FormalParameter& psi, const GroupTag& target) {
  const int n = dual_size(target);
  if (psi.size() != n)
    throw std::invalid_argument("parameter size " + std::to_string(psi.size()) + " != " + std::to_string(n));
  std::set<std::string> seen;
  for (const auto& s : psi.summands) {
    if (s.d < 1) return {false, s.key() + ": d must be positive"};
    if (s.pi.chi != psi.chi) return {false, s.pi.id + " is not self-dual against the parameter's chi"};
    if (!seen.insert(pair_key(s)).second) return {false, "not discrete: " + s.key() + " repeats"};
  }
  const int sg = sign_of_group(target);
  for (const auto& s : psi.summands) {
    int parity = (s.d - 1) % 2 == 0 ? 1 : -1;
    if (s.pi.sign * parity != sg) return {false, "sign condition fails for " + s.key()};
  }
  if (target.kind == GroupKind::GSpinEven) {
    Character prod = cg.pow(psi.chi, -target.n);
    for (const auto& s : psi.summands) prod = cg.mul(prod, cg.pow(s.pi.central, s.d));
    if (prod != cg.class_character(target.alpha))
      return {false, "chi^-n prod omega^d is " + cg.str(prod) + ", not the character of " + target.alpha};
  }
  return {true, "ok"};
}

std::string to_string(ArthurType t) {
  switch (t) {
    case ArthurType::GeneralA: return "general";
    case ArthurType::Yoshida: return "Yoshida";
    case ArthurType::Soudry: return "Soudry";
    case ArthurType::SaitoKurokawa: return "Saito-Kurokawa";
    case ArthurType::HowePS: return "Howe-PS";
    case ArthurType::OneDimensional: return "one-dimensional";
  }
  return "?";
}

char remark_letter(ArthurType t) { return static_cast<char>('a' + static_cast<int>(t)); }

TwoGroup s_group_table(const FormalParameter& psi, const GroupTag& target) {
  std::vector<std::string> labels;
  for (const auto& s : psi.summands) labels.push_back(s.key());
  const Mask all = labels.empty() ? 0 : (Mask{1} << labels.size()) - 1;
  if (target.kind == GroupKind::GSpinOdd) return TwoGroup(labels, {all});
  if (target.kind == GroupKind::GSpinEven) {
    for (const auto& s : psi.summands)
      if (s.pi.N % 2 != 0) throw std::invalid_argument("S_psi table for even GSpin needs every N_i even");
    return TwoGroup(labels, {all});
  }
  throw std::invalid_argument("no S_psi table for " + target.name());
}

Mask s_psi_mask(const FormalParameter& psi) {
  Mask m = 0;
  for (std::size_t i = 0; i < psi.summands.size(); ++i)
    if (psi.summands[i].d % 2 == 0) m |= Mask{1} << i;
  return m;
}

TwoGroupCharacter epsilon_table(const FormalParameter& psi, const GroupTag& target) {
  TwoGroup g = s_group_table(psi, target);
  TwoGroupCharacter eps = trivial_character(g);
  if (target.kind == GroupKind::GSpinOdd) {
    if (target.n != 2) throw std::invalid_argument("epsilon_psi table is only recorded for GSpin5");
    if (detect_type(psi) == ArthurType::SaitoKurokawa && psi.root_number_negative)
      for (auto& v : eps.values) v = -1;
    return eps;
  }
  for (const auto& s : psi.summands)
    if (s.d != 1) throw std::invalid_argument("epsilon_psi for even GSpin only when every d_i = 1");
  return eps;
}

Classification classify(const FormalParameter& psi) {
  const GroupTag g5 = GroupTag::gspin_odd(2);
  if (psi.size() != 4) throw std::invalid_argument("not a GSpin5 parameter: size " + std::to_string(psi.size()));
  // membership without the character checks (those need the scenario's character group)
  std::set<std::string> seen;
  for (const auto& s : psi.summands) {
    if (!seen.insert(pair_key(s)).second) throw std::invalid_argument("not discrete: " + s.key());
    int parity = (s.d - 1) % 2 == 0 ? 1 : -1;
    if (s.pi.sign * parity != -1) throw std::invalid_argument("sign condition fails for " + s.key());
  }
  Classification c;
  c.type = detect_type(psi);
  c.s_group = s_group_table(psi, g5);
  c.epsilon = epsilon_table(psi, g5);
  c.s_psi = s_psi_mask(psi);
  return c;
}

int m_psi(const FormalParameter& psi, const GroupTag& target) {
  if (target.kind != GroupKind::GSpinEven) return 1;
  for (const auto& s : psi.summands)
    if (s.pi.N % 2 != 0) return 1;
  return 2;
}

int multiplicity(const FormalParameter& psi, const GroupTag& target, const std::vector<LocalDatum>& local) {
  TwoGroup g = s_group_table(psi, target);
  TwoGroupCharacter eps = epsilon_table(psi, target);
  TwoGroupCharacter prod = trivial_character(g);
  for (const auto& l : local) {
    if (!respects_relations(g, l.character))
      throw std::invalid_argument("local character at " + l.place + " is not a character of S_psi");
    prod = multiply(prod, l.character);
  }
  return prod == eps ? m_psi(psi, target) : 0;
}

std::string to_string(const Monomial& m) {
  std::string s = m.coeff.get_str();
  if (m.q_exp != 0) s += "*q^(" + std::to_string(m.q_exp) + "/2)";
  return s;
}

StdComposition std_compose(const FormalParameter& psi, const std::map<std::string, Matrix>& satake,
                           const Rational& chi_value) {
  StdComposition out;
  out.gl1 = chi_value;
  for (const auto& s : psi.summands) {
    auto it = satake.find(s.key());
    if (it == satake.end()) it = satake.find(s.pi.id);
    if (it == satake.end()) throw std::invalid_argument("no Satake input for " + s.key());
    const Matrix& m = it->second;
    if (m.rows() != static_cast<std::size_t>(s.pi.N) || !m.square())
      throw std::invalid_argument("Satake input for " + s.key() + " has the wrong size");
    if (!m.is_diagonal()) throw std::invalid_argument("Satake input for " + s.key() + " is not diagonal");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (int k = 0; k < s.d; ++k) out.entries.push_back({m(i, i), s.d - 1 - 2 * k});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const Monomial& a, const Monomial& b) {
    return a.q_exp != b.q_exp ? a.q_exp < b.q_exp : a.coeff < b.coeff;
  });
  return out;
}

}  // namespace gsp4
