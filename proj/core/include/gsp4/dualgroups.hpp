#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gsp4/matrix.hpp"

namespace gsp4 {

enum class GroupKind {
  GSpinOdd,   // GSpin_{2n+1}, dual GSp_{2n}
  SpGL1,      // Sp_{2n} x GL1, dual SO_{2n+1} x GL1
  GSpinEven,  // GSpin_{2n}^alpha, dual GSO_{2n}
  GLGL1,      // GL_N x GL1 (the twisted ambient when N = 4)
};

struct GroupTag {
  GroupKind kind = GroupKind::GSpinOdd;
  int n = 2;                // rank datum; N for GLGL1
  std::string alpha = "1";  // square-class token, GSpinEven only

  static GroupTag gspin_odd(int n) { return {GroupKind::GSpinOdd, n, "1"}; }
  static GroupTag sp_gl1(int n) { return {GroupKind::SpGL1, n, "1"}; }
  static GroupTag gspin_even(int n, std::string alpha = "1") {
    return {GroupKind::GSpinEven, n, std::move(alpha)};
  }
  static GroupTag gl_gl1(int n) { return {GroupKind::GLGL1, n, "1"}; }

  // Size N of the standard representation of the dual group.
  int dual_dim() const;
  bool split() const { return alpha == "1"; }
  std::string name() const;

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

// "GSpin5", "GSpin4", "GSpin4^a", "Sp4xGL1", "GL4xGL1". Throws std::invalid_argument.
GroupTag parse_group(std::string_view text);

// -1 exactly when the dual group is symplectic.
int sign_of_group(const GroupTag& tag);

// J_{ij} = (-1)^i delta_{i, n+1-j} (1-based).
Matrix j_matrix(std::size_t n);

// Form preserved (up to similitude) by the standard representation of the dual group.
// GSp_{2n}: J_{2n}. SO_{2n+1}: antidiagonal ones. GSO_{2n}: antidiagonal ones.
// GL_N: none; returns the empty matrix.
Matrix dual_form(const GroupTag& tag);

struct DualElement {
  Matrix g;
  Rational x = 1;  // GL1 coordinate (similitude for GSpin tags)
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

DualElement operator*(const DualElement& a, const DualElement& b);

// lambda with g^T B g = lambda B, if any.
std::optional<Rational> similitude_factor(const Matrix& form, const Matrix& g);

// theta(g, x) = (J g^{-T} J^{-1}, x det g). Throws std::domain_error on singular g.
DualElement apply_theta(const DualElement& e, const Matrix& j);
DualElement apply_theta(const DualElement& e);
// Dual twist (J g^{-T} J^{-1} x, x).
DualElement apply_dual_theta(const DualElement& e, const Matrix& j);
// Fixed by the dual twist, i.e. J-symplectic with similitude x.
bool fixed_point_check(const DualElement& e);

// (standard matrix, similitude or GL1 value). Throws std::domain_error when e violates the tag.
std::pair<Matrix, Rational> std_rep(const GroupTag& tag, const DualElement& e);

// Data of the map GSp4 -> SO5 through the exterior square.
struct ExteriorSquareFrame {
  Matrix wedge_pairing;          // 6x6, u ^ v = <u, v> e1^e2^e3^e4
  Vector omega;                  // bivector of the symplectic form (coefficients of J^{-1})
  std::vector<Vector> complement;  // five bivectors spanning omega-perp
  Matrix frame;                  // columns: omega, complement
  Matrix gram5;                  // wedge pairing restricted to the complement
};

// Basis order of bivectors: (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
Matrix exterior_square(const Matrix& g);
const ExteriorSquareFrame& so5_frame();
// f(g, x) = wedge^2(g) / x.
Matrix f_map(const DualElement& e);
// Induced 5x5 matrix on the omega-complement. Throws std::domain_error for non-symplectic input.
Matrix project_to_so5(const DualElement& e);

struct PinningReport {
  bool pass = true;
  std::string failing;  // empty on pass
};

// Checks that g -> J g^{-T} J^{-1} preserves the upper Borel, the diagonal torus and
// permutes the simple root vectors E_{a,a+1}.
PinningReport pinning_fixed_by_theta(const Matrix& j);
PinningReport pinning_fixed_by_theta();

}  // namespace gsp4
