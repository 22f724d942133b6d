#include "gsp4/restriction.hpp"

#include <map>
#include <stdexcept>

#include "gsp4/endoscopy.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/sampling.hpp"

namespace gsp4 {

std::string to_string(BoundedShape s) {
  switch (s) {
    case BoundedShape::Irreducible: return "irreducible";
    case BoundedShape::IrreducibleInduced: return "irreducible-induced";
    case BoundedShape::YoshidaGeneric: return "yoshida-generic";
    case BoundedShape::YoshidaTwist: return "yoshida-twist";
  }
  return "?";
}

std::vector<BoundedShape> all_bounded_shapes() {
  return {BoundedShape::Irreducible, BoundedShape::IrreducibleInduced, BoundedShape::YoshidaGeneric,
          BoundedShape::YoshidaTwist};
}

namespace {

Matrix random_gl2(Sampler& rng) {
  for (;;) {
    Matrix m{{rng.integer(-3, 3), rng.integer(-3, 3)}, {rng.integer(-3, 3), rng.integer(-3, 3)}};
    if (determinant(m) != 0) return m;
  }
}

// Whether the algebra generated by the matrices is all of M2(Q), i.e. they act
// absolutely irreducibly. Words of length <= 2 already span it when it is.
bool spans_m2(const std::vector<Matrix>& ms) {
  std::vector<Vector> words = {vec(Matrix::identity(2))};
  for (const auto& a : ms) {
    words.push_back(vec(a));
    for (const auto& b : ms) words.push_back(vec(a * b));
  }
  return rank(Matrix::from_rows(words)) == 4;
}

// `count` elements of GL2 generating M2(Q).
std::vector<Matrix> irreducible_gl2_set(Sampler& rng, int count) {
  for (;;) {
    std::vector<Matrix> out;
    for (int i = 0; i < count; ++i) out.push_back(random_gl2(rng));
    if (spans_m2(out)) return out;
  }
}

// Rescale the first row of b so that det b = d.
Matrix with_det(Matrix b, const Rational& d) {
  const Rational f = d / determinant(b);
  b(0, 0) *= f;
  b(0, 1) *= f;
  return b;
}

Matrix dihedral_gl2(Sampler& rng, bool swap) {
  Rational t1 = rng.integer(2, 6), t2 = rng.integer(-5, -1);
  Matrix t = Matrix::diagonal({t1, t2});
  return swap ? Matrix{{0, 1}, {1, 0}} * t : t;
}

}  // namespace

std::vector<DualElement> sample_generators(BoundedShape shape, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<DualElement> out;
  switch (shape) {
    case BoundedShape::Irreducible:
      for (int i = 0; i < 3; ++i) {
        Rational sim;
        Matrix g = random_gsp4(rng, &sim);
        out.push_back({g, sim});
      }
      break;
    case BoundedShape::IrreducibleInduced: {
      // Siegel Levi elements and one element exchanging the two Lagrangians
      const Matrix j = j_matrix(4);
      for (const Matrix& a : irreducible_gl2_set(rng, 2)) {
        const Rational mu = rng.nonzero_integer(3);
        Matrix g(4, 4);
        g.set_block(0, 0, a);
        Matrix c = j.block(0, 2, 2, 2);
        g.set_block(2, 2, inverse(c) * inverse(a).transpose() * c * mu);
        out.push_back({g, mu});
      }
      Matrix w(4, 4);
      w.set_block(0, 2, Matrix::identity(2));
      w.set_block(2, 0, Matrix::identity(2));
      auto mu = similitude_factor(j, w);
      if (!mu) throw std::logic_error("exchange element is not a similitude");
      out.push_back({w, *mu});
      break;
    }
    case BoundedShape::YoshidaGeneric:
      for (;;) {
        auto as = irreducible_gl2_set(rng, 3);
        std::vector<Matrix> bs;
        for (const auto& a : as) bs.push_back(with_det(random_gl2(rng), determinant(a)));
        if (!spans_m2(bs)) continue;
        for (std::size_t i = 0; i < 3; ++i) out.push_back(embed_h1(as[i], bs[i]));
        break;
      }
      break;
    case BoundedShape::YoshidaTwist: {
      auto as = irreducible_gl2_set(rng, 3);
      for (std::size_t i = 0; i < 3; ++i) out.push_back(embed_h1(as[i], i == 2 ? -as[i] : as[i]));
      break;
    }
  }
  return out;
}

BoundedParameterDescriptor make_descriptor(BoundedShape shape, std::vector<DualElement> generators) {
  BoundedParameterDescriptor d;
  d.shape = shape;
  std::vector<Matrix> gs;
  for (const auto& g : generators) {
    if (!fixed_point_check(g)) throw std::invalid_argument("generator is not in GSp4");
    gs.push_back(g.g);
  }
  if (gs.empty()) throw std::domain_error("degenerate generator set: no generators");
  d.generators = std::move(generators);
  d.s_group = commutant_components(gs, j_matrix(4), false);
  if (d.s_group.group.rank() > 1) throw std::domain_error("S_phi of rank > 1 for a GSp4 parameter");
  return d;
}

std::vector<PacketMember> packet(const BoundedParameterDescriptor& phi) {
  std::vector<PacketMember> out;
  for (auto& c : all_characters(phi.s_group.group)) out.push_back({phi.name(), c});
  return out;
}

namespace {

// Element of the centraliser with the given signs on the self-dual idempotents.
Matrix sign_element(const ComponentGroup& cg, Mask signs) {
  const std::size_t n = cg.form.rows();
  Matrix x = Matrix::identity(n);
  for (std::size_t j = 0; j < cg.idempotents.size(); ++j)
    if (signs >> j & 1) x -= cg.idempotents[j] * Rational(2);
  return x;
}

}  // namespace

ProjectedParameter project_parameter(const BoundedParameterDescriptor& phi) {
  ProjectedParameter p;
  p.parent = phi.name();
  p.s_group = phi.s_group.group;
  std::vector<Matrix> gs;
  for (const auto& g : phi.generators) gs.push_back(project_to_so5(g));
  p.s_group_prime = commutant_components(gs, so5_frame().gram5, true);
  for (std::size_t i = 0; i < phi.s_group.basis.size(); ++i) {
    Matrix x = sign_element(phi.s_group, phi.s_group.basis[i]);
    auto sim = similitude_factor(j_matrix(4), x);
    if (!sim) throw std::logic_error("sign element is not a similitude");
    auto e = p.s_group_prime.element(project_to_so5({x, *sim}));
    if (!e) throw std::logic_error("projected sign element is not a sign element of S_phi'");
    p.embedding.push_back(*e);
  }
  return p;
}

Mask embed(const ProjectedParameter& proj, Mask m) {
  Mask out = 0;
  for (std::size_t i = 0; i < proj.embedding.size(); ++i)
    if (m >> i & 1) out ^= proj.embedding[i];
  return out;
}

bool embedding_injective(const ProjectedParameter& proj) {
  const TwoGroup& target = proj.s_group_prime.group;
  for (Mask m = 1; m <= proj.s_group.all_labels(); ++m) {
    if (proj.s_group.is_trivial(m)) continue;
    if (target.is_trivial(embed(proj, m))) return false;
  }
  return true;
}

std::set<TwoGroupCharacter> restrict_member(const PacketMember& m, const ProjectedParameter& proj) {
  if (m.parent != proj.parent) throw std::invalid_argument("member of " + m.parent + " restricted along " + proj.parent);
  if (!respects_relations(proj.s_group, m.label)) throw std::invalid_argument("label is not a character of S_phi");
  std::set<TwoGroupCharacter> out;
  for (auto& c : all_characters(proj.s_group_prime.group)) {
    bool ok = true;
    for (std::size_t i = 0; i < proj.embedding.size(); ++i)
      if (evaluate(c, proj.embedding[i]) != m.label.values[i]) ok = false;
    if (ok) out.insert(c);
  }
  return out;
}

CountReport restriction_count_identity(const BoundedParameterDescriptor& phi, const ProjectedParameter& proj) {
  CountReport r;
  auto dual = all_characters(proj.s_group_prime.group);
  r.dual_size = dual.size();
  r.injective = embedding_injective(proj);
  std::map<TwoGroupCharacter, int> seen;
  auto members = packet(phi);
  r.sign_split = true;
  for (const auto& m : members) {
    auto out = restrict_member(m, proj);
    r.per_member.push_back(out.size());
    for (const auto& c : out) ++seen[c];
    // each constituent pairs with s as the member's sign
    for (const auto& c : out)
      for (std::size_t i = 0; i < proj.embedding.size(); ++i)
        if (evaluate(c, proj.embedding[i]) != m.label.values[i]) r.sign_split = false;
  }
  if (members.size() == 1 && r.per_member[0] != r.dual_size) r.sign_split = false;
  if (members.size() == 2 && r.per_member[0] != r.per_member[1]) r.sign_split = false;
  r.partition = seen.size() == dual.size();
  for (const auto& [c, k] : seen)
    if (k != 1) r.partition = false;
  if (!r.partition) r.failure = "restrictions do not partition the dual of S_phi'";
  else if (!r.injective) r.failure = "S_phi -> S_phi' is not injective";
  else if (!r.sign_split) r.failure = "sign split differs from the member labels";
  return r;
}

std::string to_string(Gso4Shape s) {
  switch (s) {
    case Gso4Shape::Generic: return "generic";
    case Gso4Shape::DihedralPair: return "dihedral-pair";
    case Gso4Shape::SameDihedral: return "same-dihedral";
  }
  return "?";
}

std::vector<Gso4Shape> all_gso4_shapes() { return {Gso4Shape::Generic, Gso4Shape::DihedralPair, Gso4Shape::SameDihedral}; }

std::vector<std::pair<Matrix, Matrix>> sample_gso4_generators(Gso4Shape shape, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<std::pair<Matrix, Matrix>> out;
  switch (shape) {
    case Gso4Shape::Generic:
      for (int i = 0; i < 3; ++i) {
        Matrix a = random_gl2(rng);
        out.emplace_back(a, with_det(random_gl2(rng), determinant(a)));
      }
      break;
    case Gso4Shape::DihedralPair:
      // a and b normalise tori, swapped by different generators
      for (int i = 0; i < 3; ++i) {
        Matrix a = dihedral_gl2(rng, i == 1), b = dihedral_gl2(rng, i == 2);
        Matrix bb = with_det(b, determinant(a));
        out.emplace_back(a, bb);
      }
      break;
    case Gso4Shape::SameDihedral:
      for (int i = 0; i < 3; ++i) {
        Matrix a = dihedral_gl2(rng, i == 2), b = dihedral_gl2(rng, i == 2);
        out.emplace_back(a, with_det(b, determinant(a)));
      }
      break;
  }
  return out;
}

Gso4Restriction restrict_gso4(const std::vector<std::pair<Matrix, Matrix>>& generators) {
  const Matrix ja{{0, -1}, {1, 0}}, jb{{0, 1}, {-1, 0}};
  const Matrix form = kronecker(ja, jb);
  std::vector<Matrix> gs;
  for (const auto& [a, b] : generators) {
    if (determinant(a) != determinant(b)) throw std::invalid_argument("generator pair with unequal determinants");
    gs.push_back(h1_to_so4(a, b));
  }
  if (gs.empty()) throw std::domain_error("degenerate generator set: no generators");
  Gso4Restriction r;
  r.s_group_prime = commutant_components(gs, form, true);
  for (auto& c : all_characters(r.s_group_prime.group)) r.constituents.insert(c);
  return r;
}

}  // namespace gsp4
