#include "gsp4/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gsp4/linalg.hpp"

namespace gsp4 {

namespace {

int rank_of(const GroupTag& g) { return g.n; }

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

bool is_gl(const GroupTag& g) { return g.kind == GroupKind::GLGL1; }

// Sizes of the size classes, by decreasing k.
std::vector<std::pair<int, int>> class_sizes(const std::vector<int>& blocks) {
  std::vector<std::pair<int, int>> out;  // (k, n_k)
  for (int b : blocks) {
    if (!out.empty() && out.back().first == b)
      ++out.back().second;
    else
      out.emplace_back(b, 1);
  }
  return out;
}

std::vector<std::vector<int>> cycles(const std::vector<int>& sigma) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (auto j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

bool is_permutation(const std::vector<int>& s) {
  std::vector<int> t = s;
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

std::string LeviDescriptor::str() const {
  std::string s;
  for (int b : blocks) s += "GL" + std::to_string(b) + " x ";
  if (is_gl(group)) {
    s += "GL1";
  } else {
    GroupTag gm = group;
    gm.n = m;
    s += gm.name();
  }
  if (outer_copy_flag) s += " (outer)";
  return s;
}

void validate_levi(const LeviDescriptor& l) {
  const int n = rank_of(l.group);
  if (n < 1 || n > 4) throw std::invalid_argument("unsupported rank " + std::to_string(n));
  int sum = l.m;
  for (int b : l.blocks) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    sum += b;
  }
  if (sum != n) throw std::invalid_argument("block sizes and m do not add up to the rank");
  if (!std::is_sorted(l.blocks.begin(), l.blocks.end(), std::greater<>()))
    throw std::invalid_argument("blocks must be non-increasing");
  if (is_gl(l.group) && l.m != 0) throw std::invalid_argument("GL Levis have m = 0");
  if (l.group.kind == GroupKind::GSpinEven) {
    if (!l.group.split() && l.m == 0) throw std::invalid_argument("m > 0 required for non-split even GSpin");
    if (l.group.split() && l.m == 1) throw std::invalid_argument("m = 1 is excluded for split even GSpin");
  }
  if (l.outer_copy_flag &&
      !(l.group.kind == GroupKind::GSpinEven && l.group.split() && l.m == 0 && !l.blocks.empty() && l.blocks.back() > 1))
    throw std::invalid_argument("outer copy only exists for split even GSpin with m = 0 and n_r > 1");
}

std::vector<LeviDescriptor> enumerate_levis(const GroupTag& group) {
  const int n = rank_of(group);
  if (n < 1 || n > 4) throw std::invalid_argument("unsupported rank " + std::to_string(n));
  std::vector<LeviDescriptor> out;
  for (int m = is_gl(group) ? 0 : n; m >= 0; --m) {
    if (group.kind == GroupKind::GSpinEven) {
      if (!group.split() && m == 0) continue;
      if (group.split() && m == 1) continue;
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n - m, n - m, cur, parts);
    for (auto& p : parts) {
      out.push_back({group, p, m, false});
      if (group.kind == GroupKind::GSpinEven && group.split() && m == 0 && !p.empty() && p.back() > 1)
        out.push_back({group, p, m, true});
    }
  }
  return out;
}

std::string TwistedWeylElement::str() const {
  std::string s = "[" + levi.str() + "]";
  for (const auto& c : classes) {
    s += " k=" + std::to_string(c.k) + ":(";
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
      if (i) s += ' ';
      if (!c.signs.empty()) s += c.signs[i] < 0 ? '-' : '+';
      s += std::to_string(c.sigma[i]);
    }
    s += ")";
  }
  if (is_gl(levi.group)) s += theta0 ? " theta0" : " untwisted";
  return s;
}

bool is_valid(const TwistedWeylElement& w) {
  try {
    validate_levi(w.levi);
  } catch (const std::invalid_argument&) {
    return false;
  }
  auto sizes = class_sizes(w.levi.blocks);
  if (sizes.size() != w.classes.size()) return false;
  const bool signed_group = !is_gl(w.levi.group);
  int odd_flips = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto& c = w.classes[i];
    if (c.k != sizes[i].first || c.sigma.size() != static_cast<std::size_t>(sizes[i].second)) return false;
    if (!is_permutation(c.sigma)) return false;
    if (signed_group != !c.signs.empty()) return false;
    if (signed_group && c.signs.size() != c.sigma.size()) return false;
    for (int s : c.signs) {
      if (s != 1 && s != -1) return false;
      if (s == -1 && c.k % 2 == 1) ++odd_flips;
    }
  }
  if (!is_gl(w.levi.group) && !w.theta0) return false;
  // index two: an even number of sign changes in the ambient D_n Weyl group
  if (w.levi.group.kind == GroupKind::GSpinEven && w.levi.m == 0 && odd_flips % 2 == 1) return false;
  return true;
}

std::vector<TwistedWeylElement> enumerate_weyl(const LeviDescriptor& l) {
  validate_levi(l);
  auto sizes = class_sizes(l.blocks);
  const bool signed_group = !is_gl(l.group);
  std::vector<TwistedWeylElement> out;
  std::vector<SizeClass> cur;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool theta0) {
    if (i == sizes.size()) {
      TwistedWeylElement w{l, cur, theta0};
      if (is_valid(w)) out.push_back(w);
      return;
    }
    const auto [k, nk] = sizes[i];
    std::vector<int> sigma(static_cast<std::size_t>(nk));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      const int nsign = signed_group ? (1 << nk) : 1;
      for (int s = 0; s < nsign; ++s) {
        SizeClass c{k, sigma, {}};
        if (signed_group)
          for (int b = 0; b < nk; ++b) c.signs.push_back(s >> b & 1 ? -1 : 1);
        cur.push_back(c);
        rec(i + 1, theta0);
        cur.pop_back();
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  };
  rec(0, true);
  if (is_gl(l.group)) rec(0, false);
  return out;
}

bool is_regular(const TwistedWeylElement& w) {
  if (is_gl(w.levi.group) && !w.theta0) {
    std::size_t count = 0;
    for (const auto& c : w.classes) count += cycles(c.sigma).size();
    return count <= 1;
  }
  for (const auto& c : w.classes)
    for (const auto& cyc : cycles(c.sigma)) {
      if (is_gl(w.levi.group)) {
        if (cyc.size() % 2 == 0) return false;
        continue;
      }
      int p = 1;
      for (int i : cyc) p *= c.signs[static_cast<std::size_t>(i)];
      if (p != -1) return false;
    }
  return true;
}

AAction a_action(const TwistedWeylElement& w) {
  if (!is_valid(w)) throw std::invalid_argument("invalid Weyl element " + w.str());
  std::size_t r = 0;
  for (const auto& c : w.classes) r += c.sigma.size();
  const std::size_t z = r;  // central coordinate
  AAction a;
  a.action = Matrix(r + 1, r + 1);
  a.action(z, z) = 1;
  const bool gl = is_gl(w.levi.group);
  const bool gspin = w.levi.group.kind == GroupKind::GSpinOdd || w.levi.group.kind == GroupKind::GSpinEven;
  std::size_t off = 0;
  for (const auto& c : w.classes) {
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
      const std::size_t src = off + i, dst = off + static_cast<std::size_t>(c.sigma[i]);
      if (gl) {
        // theta0: X -> -X^T on the block, the GL1 coordinate picks up tr X
        a.action(dst, src) = w.theta0 ? -1 : 1;
        if (w.theta0) a.action(z, src) = c.k;
      } else {
        const int e = c.signs[i];
        a.action(dst, src) = e;
        // a sign change keeps the spinor norm, so it moves by k times the centre
        if (gspin && e == -1) a.action(z, src) = c.k;
      }
    }
    off += c.sigma.size();
  }
  Vector centre(r + 1);
  centre[z] = 1;
  a.a_g.push_back(centre);
  if (gl && r > 0) {
    Vector scalar(r + 1);
    std::size_t o = 0;
    for (const auto& c : w.classes)
      for (std::size_t i = 0; i < c.sigma.size(); ++i) scalar[o++] = 1;
    a.a_g.push_back(scalar);
  }
  return a;
}

Rational det_w_minus_one(const TwistedWeylElement& w) {
  AAction a = a_action(w);
  Matrix q = quotient_action(a.action, a.a_g);
  if (q.rows() == 0) return 1;
  return determinant(q - Matrix::identity(q.rows()));
}

Rational det_factor(const TwistedWeylElement& w) {
  if (!is_regular(w)) throw std::domain_error("det_factor called on a non-regular element " + w.str());
  return abs(det_w_minus_one(w));
}

bool fixed_point_condition(const TwistedWeylElement& w, const std::vector<CuspidalHandle>& pi_l, const Character& chi) {
  if (!is_valid(w)) throw std::invalid_argument("invalid Weyl element " + w.str());
  std::size_t off = 0;
  for (const auto& c : w.classes) {
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
      if (off + i >= pi_l.size()) throw std::invalid_argument("too few handles for the Levi");
      if (pi_l[off + i].N != c.k) throw std::invalid_argument("handle " + pi_l[off + i].id + " has the wrong size");
    }
    off += c.sigma.size();
  }
  if (off != pi_l.size()) throw std::invalid_argument("too many handles for the Levi");
  off = 0;
  for (const auto& c : w.classes) {
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
      const auto& h = pi_l[off + i];
      if (h.chi != chi) return false;
      if (pi_l[off + static_cast<std::size_t>(c.sigma[i])].id != h.id) return false;
    }
    off += c.sigma.size();
  }
  return true;
}

DualElement dual_levi_embed(const LeviDescriptor& l, const std::vector<Matrix>& factors, const DualElement& h) {
  validate_levi(l);
  if (factors.size() != l.blocks.size()) throw std::invalid_argument("one factor per GL block expected");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].rows() != static_cast<std::size_t>(l.blocks[i]) || !factors[i].square())
      throw std::invalid_argument("factor " + std::to_string(i) + " has the wrong size");
    if (!invertible(factors[i])) throw std::domain_error("factor " + std::to_string(i) + " is singular");
  }
  if (is_gl(l.group)) return {direct_sum(factors), h.x};

  GroupTag gm = l.group;
  gm.n = l.m;
  const std::size_t mid = l.m == 0 ? (l.group.kind == GroupKind::SpGL1 ? 1 : 0) : static_cast<std::size_t>(gm.dual_dim());
  if (h.g.rows() != mid || !h.g.square()) throw std::invalid_argument("middle factor has the wrong size");
  Rational mu = 1;
  if (l.group.kind != GroupKind::SpGL1) {
    if (mid == 0) {
      mu = h.x;
    } else {
      auto s = similitude_factor(dual_form(gm), h.g);
      if (!s || *s != h.x) throw std::domain_error("middle factor is not a similitude with the stated factor");
      mu = *s;
    }
    if (sgn(mu) == 0) throw std::domain_error("zero similitude");
  }

  const Matrix b = dual_form(l.group);
  const std::size_t n = b.rows();
  Matrix out(n, n);
  std::size_t off = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto k = factors[i].rows();
    const std::size_t partner = n - off - k;
    Matrix c = b.block(off, partner, k, k);
    out.set_block(off, off, factors[i]);
    out.set_block(partner, partner, inverse(c) * inverse(factors[i]).transpose() * c * mu);
    off += k;
  }
  if (mid > 0) out.set_block(off, off, h.g);
  if (l.outer_copy_flag) {
    // conjugate by the swap of the two middle coordinates, an element of O \ SO
    Matrix p = Matrix::identity(n);
    p(n / 2 - 1, n / 2 - 1) = p(n / 2, n / 2) = 0;
    p(n / 2 - 1, n / 2) = p(n / 2, n / 2 - 1) = 1;
    out = p * out * p;
  }
  return {out, h.x};
}

}  // namespace gsp4
