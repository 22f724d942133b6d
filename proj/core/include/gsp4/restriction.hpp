#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gsp4/dualgroups.hpp"
#include "gsp4/oracle.hpp"
#include "gsp4/twogroup.hpp"

namespace gsp4 {

// Shapes of bounded GSp4 parameters realised by sample generators.
enum class BoundedShape {
  Irreducible,         // Zariski-dense image, S = 1
  IrreducibleInduced,  // phi = phi (x) omega for a quadratic omega, S = 1
  YoshidaGeneric,      // phi1 + phi2, unrelated 2-dim blocks with equal determinant
  YoshidaTwist,        // phi2 = phi1 (x) omega
};
std::string to_string(BoundedShape s);
std::vector<BoundedShape> all_bounded_shapes();

struct BoundedParameterDescriptor {
  BoundedShape shape = BoundedShape::Irreducible;
  std::vector<DualElement> generators;  // in GSp4, J coordinates
  ComponentGroup s_group;               // S_phi, recomputed from the generators
  std::string name() const { return to_string(shape); }
};

// Generators for a shape. Deterministic in the seed.
std::vector<DualElement> sample_generators(BoundedShape shape, std::uint64_t seed);
// Computes S_phi from the generators. Throws std::domain_error on a degenerate generator set
// or when S_phi has rank > 1.
BoundedParameterDescriptor make_descriptor(BoundedShape shape, std::vector<DualElement> generators);

struct PacketMember {
  std::string parent;
  TwoGroupCharacter label;  // on S_phi
};
std::vector<PacketMember> packet(const BoundedParameterDescriptor& phi);

struct ProjectedParameter {
  std::string parent;
  TwoGroup s_group;              // S_phi
  ComponentGroup s_group_prime;  // S_phi' in SO5
  std::vector<Mask> embedding;   // image of each S_phi label, over the S_phi' basis
};

// pr o phi through project_to_so5 and the commutant in SO5.
// Throws std::domain_error on a degenerate generator set.
ProjectedParameter project_parameter(const BoundedParameterDescriptor& phi);

// Image of an S_phi element (mask over its labels).
Mask embed(const ProjectedParameter& proj, Mask m);
bool embedding_injective(const ProjectedParameter& proj);

// Characters of S_phi' whose pullback to S_phi is the member's label.
// Throws std::invalid_argument when the member belongs to another parameter.
std::set<TwoGroupCharacter> restrict_member(const PacketMember& m, const ProjectedParameter& proj);

struct CountReport {
  std::size_t dual_size = 0;
  std::vector<std::size_t> per_member;
  bool partition = false;  // every character of S_phi' exactly once
  bool injective = false;
  bool sign_split = false;  // trivial S_phi: one member gets all; else split by the value at s
  std::string failure;
  bool pass() const { return partition && injective && sign_split; }
};
CountReport restriction_count_identity(const BoundedParameterDescriptor& phi, const ProjectedParameter& proj);

// GSO4 side: H^ = {(a, b) : det a = det b} mapped to SO4 by a (x) b / det a.
enum class Gso4Shape { Generic, DihedralPair, SameDihedral };
std::string to_string(Gso4Shape s);
std::vector<Gso4Shape> all_gso4_shapes();
std::vector<std::pair<Matrix, Matrix>> sample_gso4_generators(Gso4Shape shape, std::uint64_t seed);

struct Gso4Restriction {
  ComponentGroup s_group_prime;          // S_phi' in SO4
  std::set<TwoGroupCharacter> constituents;
};
// The single member restricts to the whole packet of phi'.
// Throws std::invalid_argument when a generator pair has unequal determinants.
Gso4Restriction restrict_gso4(const std::vector<std::pair<Matrix, Matrix>>& generators);

}  // namespace gsp4
