#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsp4/dualgroups.hpp"
#include "gsp4/sampling.hpp"

namespace gsp4 {

enum class EndoscopicAmbient {
  TwistedGamma,  // (GL4 x GL1) x| theta
  GSpin5,
  GSpin4,
};

// "Gamma~", "GSpin5", "GSpin4". Throws std::invalid_argument.
EndoscopicAmbient parse_ambient(std::string_view text);
std::string ambient_name(EndoscopicAmbient a);

enum class XiKind {
  GSp4,       // J-symplectic similitudes, x = similitude
  GO4,        // similitudes of the printed Gram matrix, x = similitude
  RAlpha,     // diag(x1, A, x2), x1 x2 = det A, x = det A
  H1,         // (a, b) with det a = det b; a on {1,4}, b on {2,3}
  H2,         // diag(a, b, l/b, l/a)
};

struct EndoscopicDatum {
  std::string name;
  EndoscopicAmbient ambient = EndoscopicAmbient::TwistedGamma;
  std::string h_descriptor;
  XiKind xi = XiKind::GSp4;
  bool needs_nontrivial_alpha = false;
  DualElement s;
  std::optional<Matrix> gram;       // form preserved by xi(H^), when printed
  std::optional<Matrix> frobenius;  // image of 1 x| c, non-split case
  std::optional<Rational> iota;     // only where the value is recorded
  std::size_t hat_h_dim = 0;
};

// Throws std::invalid_argument for an unsupported ambient.
std::vector<EndoscopicDatum> catalog(EndoscopicAmbient ambient);

// Ambient form: J for GSpin5, antidiagonal ones for GSpin4; empty for the twisted space.
Matrix ambient_form(EndoscopicAmbient ambient);

// Linear map on the ambient dual Lie algebra whose fixed space is Lie of the centraliser.
// Twisted: on gl4 + gl1 (coordinates vec(X), t), (X, t) -> (s(-J X^T J^{-1} + t) s^{-1}, t).
// Ordinary: Ad(s) on gl4, to be intersected with the similitude algebra of the form.
Matrix twisted_lie_action(const EndoscopicDatum& d);
// Dimension of the fixed space of twisted_lie_action inside the ambient Lie algebra.
std::size_t centralizer_dimension(const EndoscopicDatum& d);

// Basis of Lie xi(H^) built from its description (independent of s).
std::vector<Vector> xi_lie_basis(const EndoscopicDatum& d);
// Random element of xi(H^) built from its description.
DualElement xi_sample(const EndoscopicDatum& d, Sampler& rng);
// Whether e is fixed by Ad(s) (composed with the dual twist for the twisted ambient).
bool fixed_by_datum(const EndoscopicDatum& d, const DualElement& e);

struct CentralizerReport {
  std::string datum;
  std::size_t expected = 0;
  std::size_t computed = 0;
  bool dimension_ok = false;
  bool lie_ok = false;        // Lie xi(H^) equals the fixed space
  bool group_ok = false;      // sampled xi(H^) elements are fixed
  bool frobenius_ok = true;   // c-image: involution normalising xi(H^)
  std::string failure;
  bool pass() const { return dimension_ok && lie_ok && group_ok && frobenius_ok; }
};

CentralizerReport verify_centralizer(const EndoscopicDatum& d, std::uint64_t seed = 1, int samples = 8);

struct AlphaRecovery {
  bool split = true;
  std::string token = "1";
};

// det g = x^2 means split; otherwise the unique nontrivial token among `declared`.
// Throws std::invalid_argument if no single nontrivial token was declared.
AlphaRecovery recover_alpha(const Matrix& g, const Rational& x, const std::vector<std::string>& declared);

// Both restriction squares, checked on seeded samples.
struct DiagramReport {
  int samples = 0;
  int first_square_ok = 0;   // f o xi = (1 + Std) o pr, after the frame change
  int second_square_ok = 0;  // pr o xi' = xi' o (H^ -> SO4)
  std::string failure;
  bool pass() const { return samples > 0 && first_square_ok == samples && second_square_ok == samples; }
};

DiagramReport restriction_diagrams_commute(std::uint64_t seed = 1, int samples = 20);

// Embedding of H1^ = {(a, b) : det a = det b} into GSp4.
DualElement embed_h1(const Matrix& a, const Matrix& b);
// H1^ -> SO4: a (x) b / det a.
Matrix h1_to_so4(const Matrix& a, const Matrix& b);
// SO4 -> SO5 in the complement coordinates of so5_frame().
Matrix xi_prime_so4(const Matrix& k);

}  // namespace gsp4
