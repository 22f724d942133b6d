#include "gsp4/twogroup.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gsp4 {

std::vector<Mask> f2_echelon(const std::vector<Mask>& vs) {
  std::vector<Mask> rows;
  for (Mask v : vs) {
    for (Mask r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    if (v == 0) continue;
    Mask lead = std::bit_floor(v);
    for (Mask& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return rows;
}

bool f2_coordinates(const std::vector<Mask>& basis, Mask m, Mask& out) {
  if (basis.size() >= 20) throw std::invalid_argument("F2 basis too large");
  for (Mask c = 0; c < (Mask{1} << basis.size()); ++c) {
    Mask v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c >> i & 1) v ^= basis[i];
    if (v == m) {
      out = c;
      return true;
    }
  }
  return false;
}

TwoGroup::TwoGroup(std::vector<std::string> labels, std::vector<Mask> relations)
    : labels_(std::move(labels)), relations_(std::move(relations)) {
  if (labels_.size() > 31) throw std::invalid_argument("too many labels for a two-group");
  for (Mask r : relations_)
    if (r & ~all_labels()) throw std::invalid_argument("relation mentions an unknown label");
  echelon_ = f2_echelon(relations_);
}

std::size_t TwoGroup::rank() const { return labels_.size() - echelon_.size(); }

Mask TwoGroup::reduce(Mask m) const {
  for (Mask r : echelon_)
    if (m & std::bit_floor(r)) m ^= r;
  return m;
}

std::size_t TwoGroup::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string TwoGroup::describe(Mask m) const {
  m = reduce(m);
  if (m == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (m >> i & 1) {
      if (!out.empty()) out += '+';
      out += labels_[i];
    }
  return out;
}

TwoGroupCharacter trivial_character(const TwoGroup& g) { return {std::vector<int>(g.labels().size(), 1)}; }

int evaluate(const TwoGroupCharacter& c, Mask m) {
  int v = 1;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (m >> i & 1) v *= c.values[i];
  return v;
}

bool respects_relations(const TwoGroup& g, const TwoGroupCharacter& c) {
  if (c.values.size() != g.labels().size()) return false;
  for (int v : c.values)
    if (v != 1 && v != -1) return false;
  for (Mask r : g.relations())
    if (evaluate(c, r) != 1) return false;
  return true;
}

TwoGroupCharacter multiply(const TwoGroupCharacter& a, const TwoGroupCharacter& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("character size mismatch");
  TwoGroupCharacter c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] *= b.values[i];
  return c;
}

std::vector<TwoGroupCharacter> all_characters(const TwoGroup& g) {
  const std::size_t k = g.labels().size();
  std::vector<TwoGroupCharacter> out;
  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    TwoGroupCharacter c{std::vector<int>(k, 1)};
    // bit k-1-i so that + sorts before - label by label
    for (std::size_t i = 0; i < k; ++i)
      if (m >> (k - 1 - i) & 1) c.values[i] = -1;
    if (respects_relations(g, c)) out.push_back(c);
  }
  return out;
}

std::string describe(const TwoGroupCharacter& c) {
  std::string s;
  for (int v : c.values) s += v > 0 ? '+' : '-';
  return s;
}

bool isomorphic_as_labelled(const TwoGroup& a, const TwoGroup& b) {
  return a.labels() == b.labels() && f2_echelon(a.relations()) == f2_echelon(b.relations());
}

}  // namespace gsp4
