#pragma once

#include <vector>

#include "gsp4/characters.hpp"
#include "gsp4/params.hpp"

namespace gsp4 {

// Symbolic fixtures shared by the self-test, the acceptance suite and the benchmarks.
// Characters: mu (infinite order), quadratic classes a and b; chi = mu^2.
CharacterGroup fixture_characters();

struct TypeFixture {
  ArthurType type;
  FormalParameter psi;
};
// One parameter per GSpin5 type in remark order; Saito-Kurokawa with root number +1.
std::vector<TypeFixture> type_fixtures(const CharacterGroup& cg);
// Saito-Kurokawa fixture with root number -1.
FormalParameter saito_kurokawa_fixture(const CharacterGroup& cg, bool root_number_negative);
// pi1[1] + pi2[1] on GSpin4 with two orthogonal GL2 handles of classes a and b (alpha = a*b).
FormalParameter gspin4_even_fixture(const CharacterGroup& cg);
GroupTag gspin4_even_target();

// Quadratic forms of even dimension used for the involution checks: split (antidiagonal),
// indefinite diagonal, and positive definite diagonal, by variant 0, 1, 2.
Matrix gso_test_form(std::size_t dim, int variant);

}  // namespace gsp4
