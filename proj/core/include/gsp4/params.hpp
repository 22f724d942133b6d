#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/characters.hpp"
#include "gsp4/dualgroups.hpp"
#include "gsp4/twogroup.hpp"

namespace gsp4 {

struct TensorOrigin {
  std::string first, second;  // GL2 handle ids
  Character omega_first, omega_second;
};

// Symbolic chi-self-dual cuspidal representation of GL_N.
struct CuspidalHandle {
  std::string id;
  int N = 1;
  Character central;  // omega_pi
  Character chi;      // pi^vee (x) chi = pi
  int sign = 1;       // +1 orthogonal, -1 symplectic
  std::optional<std::string> dihedral_from;  // GL2 only
  std::optional<TensorOrigin> tensor_origin;  // GL4 only
  std::optional<std::string> asai_origin;     // GL4 only
};

// omega^2 = chi^N, N odd => chi a square, sign in {+1, -1}, provenance only on the right N.
// Throws std::invalid_argument naming the failed condition.
void validate_handle(const CharacterGroup& cg, const CuspidalHandle& h);

struct Summand {
  CuspidalHandle pi;
  int d = 1;
  std::string key() const { return pi.id + "[" + std::to_string(d) + "]"; }
};

struct FormalParameter {
  Character chi;
  std::vector<Summand> summands;
  // epsilon(1/2, pi (x) eta^-1) = -1; only consulted for Saito-Kurokawa shapes
  bool root_number_negative = false;
  int size() const;  // sum N_i d_i
  std::string str() const;
};

struct Gl2Alternative {
  bool symplectic = true;
  std::optional<std::string> dihedral_class;
  CuspidalHandle handle;  // sign and dihedral_from filled in
};
// Throws std::invalid_argument when omega/chi is neither trivial nor quadratic.
Gl2Alternative gl2_alternative(const CharacterGroup& cg, const CuspidalHandle& pi, const Character& chi);

enum class Gl4Case { Tensor, Asai, Symplectic };
struct Gl4Alternative {
  Gl4Case which = Gl4Case::Symplectic;
  std::optional<std::string> asai_class;
  CuspidalHandle handle;
};
// Throws std::invalid_argument for a tensor-origin handle with omega != chi^2.
Gl4Alternative gl4_alternative(const CharacterGroup& cg, const CuspidalHandle& pi, const Character& chi);
std::string to_string(Gl4Case c);

// A discrete GL2 constituent: a cuspidal GL2 handle (d = 1) or eta[2] with eta on GL1.
struct DiscreteGl2 {
  CuspidalHandle pi;
  int d = 1;
};
FormalParameter boxtimes(const CharacterGroup& cg, const DiscreteGl2& p1, const DiscreteGl2& p2);

struct Membership {
  bool member = false;
  std::string reason;
};
// Throws std::invalid_argument when sum N_i d_i differs from N(G^).
Membership psi_disc_membership(const CharacterGroup& cg, const FormalParameter& psi, const GroupTag& target);

enum class ArthurType { GeneralA, Yoshida, Soudry, SaitoKurokawa, HowePS, OneDimensional };
std::string to_string(ArthurType t);
char remark_letter(ArthurType t);  // 'a'..'f'

struct Classification {
  ArthurType type = ArthurType::GeneralA;
  TwoGroup s_group;             // labels: summand keys
  TwoGroupCharacter epsilon;    // on s_group labels
  Mask s_psi = 0;               // image of -1 in SL2
};

// Throws std::invalid_argument when psi is not one of the six GSpin5 shapes.
Classification classify(const FormalParameter& psi);

// Table value of S_psi for GSpin5 and for even GSpin with all N_i even.
// Throws std::invalid_argument outside those cases.
TwoGroup s_group_table(const FormalParameter& psi, const GroupTag& target);
// Mask of summands with d_i even.
Mask s_psi_mask(const FormalParameter& psi);
// Table value of epsilon_psi; GSpin5 via the six types, even GSpin only when all d_i = 1.
TwoGroupCharacter epsilon_table(const FormalParameter& psi, const GroupTag& target);

int m_psi(const FormalParameter& psi, const GroupTag& target);

struct LocalDatum {
  std::string place;
  TwoGroupCharacter character;  // already pulled back to S_psi
};
// m_psi if the product of local characters is epsilon_psi, else 0.
// Throws std::invalid_argument for a character violating the relations.
int multiplicity(const FormalParameter& psi, const GroupTag& target, const std::vector<LocalDatum>& local);

struct Monomial {
  Rational coeff;
  int q_exp = 0;  // power of q^{1/2}
  friend bool operator==(const Monomial&, const Monomial&) = default;
};
std::string to_string(const Monomial& m);

struct StdComposition {
  std::vector<Monomial> entries;  // sorted by (q_exp, coeff)
  Rational gl1;
};
// Satake inputs are diagonal N_i x N_i matrices keyed by summand key.
// Throws std::invalid_argument on size mismatch or a missing key.
StdComposition std_compose(const FormalParameter& psi, const std::map<std::string, Matrix>& satake,
                           const Rational& chi_value);

}  // namespace gsp4
