#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsp4 {

// Subsets of the basis labels, bit i for label i.
using Mask = std::uint32_t;

// Elementary abelian 2-group F2^labels / span(relations).
class TwoGroup {
 public:
  TwoGroup() = default;
  TwoGroup(std::vector<std::string> labels, std::vector<Mask> relations);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Mask>& relations() const { return relations_; }
  std::size_t rank() const;
  std::size_t order() const { return std::size_t{1} << rank(); }

  // Canonical representative of the coset m + span(relations).
  Mask reduce(Mask m) const;
  bool same(Mask a, Mask b) const { return reduce(a) == reduce(b); }
  bool is_trivial(Mask m) const { return reduce(m) == 0; }
  Mask all_labels() const { return labels_.size() >= 32 ? ~Mask{0} : (Mask{1} << labels_.size()) - 1; }
  // Index of a label, or throws std::out_of_range.
  std::size_t index(const std::string& label) const;
  std::string describe(Mask m) const;  // "1" or "a+b"

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> relations_;
  std::vector<Mask> echelon_;  // reduced relations, distinct leading bits
};

// Sign vector over the labels of a TwoGroup.
struct TwoGroupCharacter {
  std::vector<int> values;  // +1 / -1 per label
  friend bool operator==(const TwoGroupCharacter&, const TwoGroupCharacter&) = default;
  friend auto operator<=>(const TwoGroupCharacter&, const TwoGroupCharacter&) = default;
};

TwoGroupCharacter trivial_character(const TwoGroup& g);
// +1 or -1.
int evaluate(const TwoGroupCharacter& c, Mask m);
bool respects_relations(const TwoGroup& g, const TwoGroupCharacter& c);
TwoGroupCharacter multiply(const TwoGroupCharacter& a, const TwoGroupCharacter& b);
// All characters of g, in lexicographic order of sign vectors (+ before -).
std::vector<TwoGroupCharacter> all_characters(const TwoGroup& g);
std::string describe(const TwoGroupCharacter& c);  // "+-+"

// Same labels, same relation span.
bool isomorphic_as_labelled(const TwoGroup& a, const TwoGroup& b);

// Reduced F2 row echelon basis of span(vs).
std::vector<Mask> f2_echelon(const std::vector<Mask>& vs);
// Coordinates of m over an F2 basis (bit i for basis[i]); false if outside the span.
bool f2_coordinates(const std::vector<Mask>& basis, Mask m, Mask& out);

}  // namespace gsp4
