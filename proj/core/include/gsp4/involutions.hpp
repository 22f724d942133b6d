#pragma once

#include <vector>

#include "gsp4/matrix.hpp"

namespace gsp4 {

struct SimilitudeElement {
  Matrix gram;  // symmetric, nondegenerate, even size
  Matrix g;
  Rational nu;  // g^T gram g = nu gram
};

// Computes nu and checks the GSO condition det g = nu^n.
// Throws std::invalid_argument when g is not in GSO(gram).
SimilitudeElement make_similitude(const Matrix& gram, const Matrix& g);

struct InvolutionPair {
  Matrix x;
  Matrix y;
};

// g = x y with x^2 = 1, x orthogonal, det x = (-1)^n, y^2 = nu. Supported dimensions 2..8.
// Throws std::domain_error outside the supported construction (non-semisimple part with
// eigenvalues outside Q(sqrt nu) that admits no nondegenerate cyclic splitting).
// Scalar g gives x = 1 for n even and a reflection for n odd, with y = x g.
InvolutionPair factor(const SimilitudeElement& e);
bool verify(const SimilitudeElement& e, const InvolutionPair& p);

// One summand U_d (x) V_d of the SL2-decomposition of a unipotent isometry.
struct UnipotentBlock {
  int d = 1;
  std::vector<Vector> top;  // basis p_j of the top weight space; the string is N^i p_j
  Matrix pairing;           // C(a, b) = B(a, N^{d-1} b) on the top space
  bool alternating = false; // d even
};

// N = log u, then strings normalised so that B(N^i p, N^j q) = 0 unless i + j = d - 1.
// Throws std::invalid_argument when u - 1 is not nilpotent or u does not preserve gram.
std::vector<UnipotentBlock> unipotent_sl2_decompose(const Matrix& u, const Matrix& gram);
// log of a unipotent matrix.
Matrix unipotent_log(const Matrix& u);

}  // namespace gsp4
