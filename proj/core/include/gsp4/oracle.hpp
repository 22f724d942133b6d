#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/matrix.hpp"
#include "gsp4/params.hpp"
#include "gsp4/twogroup.hpp"

namespace gsp4 {

// Action of m in GL2 on Sym^k of the standard representation, basis x^{k-i} y^i.
Matrix sym_power(const Matrix& m, int k);
// Basis of {Q : A^T Q A = Q for every generator A}.
std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& gens);

// pi_0 of the centraliser of a generator set inside the isometry group of `form`
// (det 1 too when `special`), modulo the image of the centre, read off from the
// self-dual primitive idempotents of the associative commutant.
struct ComponentGroup {
  Matrix form;
  std::vector<Matrix> idempotents;  // self-dual ones, each contributing a sign
  std::size_t swapped_pairs = 0;    // idempotents exchanged by the adjoint; connected
  std::vector<Mask> accepted;       // sign masks over idempotents realised in the group
  std::vector<Mask> basis;          // F2 basis of `accepted`; group labels follow it
  TwoGroup group;

  std::optional<Mask> signs(const Matrix& x) const;    // over idempotents
  std::optional<Mask> element(const Matrix& x) const;  // over `basis`
};

struct CommutantIdempotents {
  std::vector<Matrix> self_dual;  // primitive idempotents fixed by the adjoint
  Matrix paired;                  // sum of the idempotents the adjoint swaps
  std::size_t swapped_pairs = 0;
};
// Throws std::domain_error when the commutant is non-commutative or not split over Q.
CommutantIdempotents commutant_idempotents(const std::vector<Matrix>& gens, const Matrix& form);
ComponentGroup assemble_components(const CommutantIdempotents& ci, const Matrix& form, bool special,
                                   const std::vector<std::string>& labels = {});

// Throws std::domain_error when the commutant is non-commutative or not split over Q
// (degenerate generator sets). `labels`, if given, name the idempotents in order.
ComponentGroup commutant_components(const std::vector<Matrix>& gens, const Matrix& form, bool special,
                                    const std::vector<std::string>& labels = {});

struct OracleResult {
  TwoGroup group;  // labels: summand keys
  Mask s_psi = 0;  // image of -1 in SL2
  ComponentGroup raw;
  std::vector<Matrix> generators;  // realised image, in the ambient coordinates
};

// Generic realisation of Std o psi-dot: each summand contributes W_i (x) Sym^{d_i - 1},
// W_i carrying random isometries of the handle's form. GSpin5 is realised in J coordinates.
// Supported targets: GSpin5 and even GSpin. Throws std::invalid_argument otherwise.
OracleResult component_group_oracle(const FormalParameter& psi, const GroupTag& target, std::uint64_t seed = 7);

struct OracleAgreement {
  bool group_ok = false;
  bool s_psi_ok = false;
  std::string detail;
  bool pass() const { return group_ok && s_psi_ok; }
};
OracleAgreement compare_with_table(const OracleResult& o, const TwoGroup& table, Mask table_s_psi);

}  // namespace gsp4
