#include <doctest.h>

#include "gsp4/restriction.hpp"

using namespace gsp4;

TEST_CASE("every bounded shape satisfies the counting identity") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (auto sh : all_bounded_shapes()) {
      auto phi = make_descriptor(sh, sample_generators(sh, seed));
      auto proj = project_parameter(phi);
      CountReport c = restriction_count_identity(phi, proj);
      CHECK_MESSAGE(c.pass(), to_string(sh) << ": " << c.failure);
      CHECK(embedding_injective(proj));
      std::size_t total = 0;
      for (auto n : c.per_member) total += n;
      CHECK(total == c.dual_size);
    }
  }
}

TEST_CASE("component group sizes by shape") {
  // S_phi from the generators; Yoshida shapes carry Z/2, the rest are trivial
  CHECK(make_descriptor(BoundedShape::Irreducible, sample_generators(BoundedShape::Irreducible, 1)).s_group.group.order() == 1);
  CHECK(make_descriptor(BoundedShape::IrreducibleInduced, sample_generators(BoundedShape::IrreducibleInduced, 1))
            .s_group.group.order() == 1);
  CHECK(make_descriptor(BoundedShape::YoshidaGeneric, sample_generators(BoundedShape::YoshidaGeneric, 1))
            .s_group.group.order() == 2);
  CHECK(make_descriptor(BoundedShape::YoshidaTwist, sample_generators(BoundedShape::YoshidaTwist, 1))
            .s_group.group.order() == 2);
}

TEST_CASE("trivial S_phi restricts to the whole dual") {
  auto phi = make_descriptor(BoundedShape::IrreducibleInduced, sample_generators(BoundedShape::IrreducibleInduced, 4));
  auto proj = project_parameter(phi);
  auto members = packet(phi);
  REQUIRE(members.size() == 1);
  CHECK(restrict_member(members[0], proj).size() == all_characters(proj.s_group_prime.group).size());
}

TEST_CASE("sign split for the Yoshida twist") {
  auto phi = make_descriptor(BoundedShape::YoshidaTwist, sample_generators(BoundedShape::YoshidaTwist, 2));
  auto proj = project_parameter(phi);
  REQUIRE(proj.s_group_prime.group.order() == 4);
  auto members = packet(phi);
  REQUIRE(members.size() == 2);
  auto plus = restrict_member(members[0], proj), minus = restrict_member(members[1], proj);
  CHECK(plus.size() == 2);
  CHECK(minus.size() == 2);
  // the image of s: + on the plus side, - on the minus side
  Mask s = 0;
  for (std::size_t i = 0; i < phi.s_group.group.labels().size(); ++i)
    if (!phi.s_group.group.is_trivial(Mask{1} << i)) s = Mask{1} << i;
  const Mask image = embed(proj, s);
  for (const auto& c : plus) CHECK(evaluate(c, image) == evaluate(members[0].label, s));
  for (const auto& c : minus) CHECK(evaluate(c, image) == evaluate(members[1].label, s));
  for (const auto& c : plus) CHECK(minus.count(c) == 0);
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(make_descriptor(BoundedShape::Irreducible, {DualElement{Matrix::identity(4), 1}}), std::domain_error);
  CHECK_THROWS_AS(make_descriptor(BoundedShape::Irreducible, {}), std::domain_error);
  auto a = make_descriptor(BoundedShape::YoshidaGeneric, sample_generators(BoundedShape::YoshidaGeneric, 1));
  auto b = make_descriptor(BoundedShape::Irreducible, sample_generators(BoundedShape::Irreducible, 1));
  auto proj_b = project_parameter(b);
  CHECK_THROWS_AS(restrict_member(packet(a)[0], proj_b), std::invalid_argument);
}

TEST_CASE("GSO4 to SO4") {
  for (std::uint64_t seed : {1u, 2u}) {
    for (auto sh : all_gso4_shapes()) {
      Gso4Restriction r = restrict_gso4(sample_gso4_generators(sh, seed));
      CHECK(r.constituents.size() == all_characters(r.s_group_prime.group).size());
    }
  }
  CHECK(restrict_gso4(sample_gso4_generators(Gso4Shape::Generic, 1)).constituents.size() == 1);
  CHECK_THROWS_AS(restrict_gso4({{Matrix::identity(2), Matrix::diagonal({1, 2})}}), std::invalid_argument);
}

TEST_CASE("samplers never produce degenerate generator sets") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    for (auto sh : all_bounded_shapes()) {
      CAPTURE(seed);
      CAPTURE(to_string(sh));
      auto phi = make_descriptor(sh, sample_generators(sh, seed));
      CHECK(restriction_count_identity(phi, project_parameter(phi)).pass());
    }
    for (auto sh : all_gso4_shapes()) {
      Gso4Restriction g = restrict_gso4(sample_gso4_generators(sh, seed));
      CHECK(g.constituents.size() == all_characters(g.s_group_prime.group).size());
    }
  }
}
