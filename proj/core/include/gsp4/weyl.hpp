#pragma once

#include <string>
#include <vector>

#include "gsp4/characters.hpp"
#include "gsp4/dualgroups.hpp"
#include "gsp4/params.hpp"

namespace gsp4 {

// Standard Levi GL_{n_1} x ... x GL_{n_r} x G_m, one representative per multiset {n_i}
// (blocks non-increasing). For GLGL1 the GL1 factor is implicit, m = 0 and G itself is {N}.
struct LeviDescriptor {
  GroupTag group;
  std::vector<int> blocks;
  int m = 0;
  bool outer_copy_flag = false;  // image under the outer automorphism (split even GSpin, m = 0)

  bool is_full() const { return group.kind == GroupKind::GLGL1 ? blocks.size() == 1 : blocks.empty(); }
  std::string str() const;
};

// Throws std::invalid_argument for rank > 4 or a LeviDescriptor violating the constraints.
std::vector<LeviDescriptor> enumerate_levis(const GroupTag& group);
void validate_levi(const LeviDescriptor& l);

// Data for the n_k blocks of size k, in the order they appear in the Levi.
struct SizeClass {
  int k = 1;
  std::vector<int> sigma;  // permutation of 0..n_k-1
  std::vector<int> signs;  // GSpin and Sp: +-1 per block; empty for GL
};

struct TwistedWeylElement {
  LeviDescriptor levi;
  std::vector<SizeClass> classes;  // by decreasing k
  bool theta0 = true;              // GL case only: composed with g -> g^{-T}
  std::string str() const;
};

// Lies in the image of W(L, G) (index two when G is even GSpin, m = 0, some odd k occurs).
bool is_valid(const TwistedWeylElement& w);
// All valid elements for the Levi; GL: both theta0 = true and false.
std::vector<TwistedWeylElement> enumerate_weyl(const LeviDescriptor& l);

// Combinatorial criterion. GL with theta0: every cycle odd. GL without theta0: a single
// cycle overall. GSpin and Sp: every cycle has sign product -1.
bool is_regular(const TwistedWeylElement& w);

// Linear action of w on a_L (block coordinates, then the central coordinate) and a basis
// of a_G inside it.
struct AAction {
  Matrix action;
  std::vector<Vector> a_g;
};
AAction a_action(const TwistedWeylElement& w);
// det(w - 1 | a_L / a_G), possibly zero.
Rational det_w_minus_one(const TwistedWeylElement& w);
// |det(w - 1 | a_L^G)|. Throws std::domain_error when w is not regular.
Rational det_factor(const TwistedWeylElement& w);

// Handles assigned to the GL blocks in Levi order.
// Throws std::invalid_argument when the assignment does not match the block sizes.
bool fixed_point_condition(const TwistedWeylElement& w, const std::vector<CuspidalHandle>& pi_l, const Character& chi);

// Block-diagonal embedding of GL_{n_1} x ... x GL_{n_r} x G_m^ into G^; tail blocks are
// the similitude-twisted contragredients adapted to the dual form.
// Throws std::invalid_argument on size mismatch, std::domain_error on a singular factor.
DualElement dual_levi_embed(const LeviDescriptor& l, const std::vector<Matrix>& factors, const DualElement& h);

}  // namespace gsp4
