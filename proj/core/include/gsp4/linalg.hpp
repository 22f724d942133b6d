#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsp4/matrix.hpp"

namespace gsp4 {

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}; one vector per free column, normalised to 1 there.
std::vector<Vector> kernel(const Matrix& m);
Rational determinant(const Matrix& m);
bool invertible(const Matrix& m);
// Throws std::domain_error on a singular input.
Matrix inverse(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
// Independent subset (first-come) of the given vectors.
std::vector<Vector> independent_subset(const std::vector<Vector>& vs);
// Standard basis vectors e_i extending the independent set `basis` to all of Q^n.
std::vector<Vector> complement_by_standard(const std::vector<Vector>& basis, std::size_t n);
// Coordinates of v in the (independent) basis; nullopt if v is outside the span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v);

// Matrix of a on the invariant subspace spanned by `basis`. Throws if not invariant.
Matrix restrict_to(const Matrix& a, const std::vector<Vector>& basis);
// Induced map on Q^n / span(basis), expressed in the standard complement.
Matrix quotient_action(const Matrix& a, const std::vector<Vector>& basis);

// Linear subspace of n x n matrices cut out by equations on vec(X).
struct LinearConstraints {
  std::size_t n = 0;
  std::vector<Vector> equations;  // each of length n*n

  static LinearConstraints all(std::size_t n) { return {n, {}}; }
  LinearConstraints& add(const LinearConstraints& other);
};

// {X : X^T B + B X = 0}
LinearConstraints isometry_lie_algebra(const Matrix& form);
// {X : X^T B + B X is a multiple of B}
LinearConstraints similitude_lie_algebra(const Matrix& form);
// {X : trace X = 0}
LinearConstraints trace_zero(std::size_t n);

std::vector<Matrix> subspace_basis(const LinearConstraints& ambient);
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& generators,
                                    const LinearConstraints& ambient);
// dim{X in ambient : X g = g X for all generators}. Throws on size mismatch.
std::size_t commutant_dimension(const std::vector<Matrix>& generators,
                                const LinearConstraints& ambient);

// Polynomials are coefficient vectors, lowest degree first.
using Polynomial = std::vector<Rational>;
Polynomial characteristic_polynomial(const Matrix& m);
Matrix evaluate(const Polynomial& p, const Matrix& m);
Rational evaluate(const Polynomial& p, const Rational& x);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

struct EigenBlock {
  Rational value;
  std::vector<Vector> basis;  // generalised eigenspace
};

struct EigenSplit {
  std::vector<EigenBlock> rational;
  std::vector<Vector> irrational;  // invariant complement without rational eigenvalues
};

EigenSplit rational_eigensplit(const Matrix& g);

// Fitting decomposition for m^n: (kernel basis, image basis), n = size.
std::pair<std::vector<Vector>, std::vector<Vector>> fitting_split(const Matrix& m);

struct QuadraticSpace {
  Matrix gram;
  explicit QuadraticSpace(Matrix g);
  std::size_t dim() const { return gram.rows(); }
};

// Columns e_1..e_k with e_i^T S e_j = 0 for i != j and e_i^T S e_i != 0. S symmetric, nondegenerate.
std::vector<Vector> orthogonal_basis(const Matrix& sym);
// Pairs (e, f) with e^T A f = 1, other pairings zero. A alternating, nondegenerate.
std::vector<std::pair<Vector, Vector>> symplectic_basis(const Matrix& alt);
// {v : v^T B w = 0 for all w in basis}.
std::vector<Vector> orthogonal_complement(const Matrix& form, const std::vector<Vector>& basis);
// Gram matrix of the form restricted to the span of `basis`.
Matrix restricted_form(const Matrix& form, const std::vector<Vector>& basis);

}  // namespace gsp4
