#include <doctest.h>

#include "gsp4/endoscopy.hpp"
#include "gsp4/linalg.hpp"

using namespace gsp4;

namespace {

const EndoscopicDatum& find(const std::vector<EndoscopicDatum>& c, const std::string& name) {
  for (const auto& d : c)
    if (d.name == name) return d;
  FAIL("missing datum " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("catalog contents") {
  auto gamma = catalog(EndoscopicAmbient::TwistedGamma);
  REQUIRE(gamma.size() == 3);
  CHECK(find(gamma, "GSpin5").s.g.is_identity());
  CHECK(find(gamma, "GSpin4^alpha").s.g == Matrix::diagonal({-1, -1, 1, 1}));
  CHECK(*find(gamma, "GSpin4^alpha").gram == Matrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  CHECK(*find(gamma, "GSpin4^alpha").frobenius ==
        Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK(find(gamma, "R^alpha").s.g == Matrix::diagonal({-1, 1, 1, 1}));
  CHECK(find(gamma, "R^alpha").needs_nontrivial_alpha);
  CHECK(catalog(EndoscopicAmbient::GSpin5).size() == 1);
  CHECK(catalog(EndoscopicAmbient::GSpin4).size() == 1);
  CHECK(parse_ambient("Gamma~") == EndoscopicAmbient::TwistedGamma);
  CHECK_THROWS_AS(parse_ambient("GSpin7"), std::invalid_argument);
}

TEST_CASE("iota constants") {
  CHECK(*find(catalog(EndoscopicAmbient::GSpin5), "H1").iota == Rational(1, 4));
  CHECK(*find(catalog(EndoscopicAmbient::TwistedGamma), "GSpin5").iota == 1);
  CHECK_FALSE(find(catalog(EndoscopicAmbient::TwistedGamma), "R^alpha").iota.has_value());
}

TEST_CASE("centraliser dimensions") {
  // dim gsp4 = 11, gso4 = 7, {diag(x1, A, x2)} = 5, {(a, b) : det a = det b} = 7, H2 dual = 3
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"GSpin5", 11}, {"GSpin4^alpha", 7}, {"R^alpha", 5}, {"H1", 7}, {"H2^alpha", 3}};
  std::size_t i = 0;
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin5, EndoscopicAmbient::GSpin4})
    for (const auto& d : catalog(amb)) {
      REQUIRE(i < expected.size());
      CHECK(d.name == expected[i].first);
      CHECK(centralizer_dimension(d) == expected[i].second);
      CentralizerReport r = verify_centralizer(d, 4);
      CHECK_MESSAGE(r.pass(), r.datum << ": " << r.failure);
      CHECK(xi_lie_basis(d).size() == expected[i].second);
      ++i;
    }
  CHECK(i == expected.size());
}

TEST_CASE("corrupted s is caught") {
  auto d = find(catalog(EndoscopicAmbient::TwistedGamma), "GSpin4^alpha");
  d.s.g(0, 0) = 2;
  CentralizerReport r = verify_centralizer(d);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("Frobenius images are involutions") {
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin4})
    for (const auto& d : catalog(amb))
      if (d.frobenius) CHECK((*d.frobenius * *d.frobenius).is_identity());
}

TEST_CASE("sampled xi images are fixed") {
  Sampler rng(8);
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin5, EndoscopicAmbient::GSpin4})
    for (const auto& d : catalog(amb))
      for (int i = 0; i < 5; ++i) CHECK(fixed_by_datum(d, xi_sample(d, rng)));
}

TEST_CASE("recover alpha") {
  CHECK(recover_alpha(Matrix::diagonal({2, 3, 1, 6}), 6, {"a"}).split);
  AlphaRecovery r = recover_alpha(Matrix::diagonal({2, 1, 1, 1}), 1, {"1", "a"});
  CHECK_FALSE(r.split);
  CHECK(r.token == "a");
  CHECK_THROWS_AS(recover_alpha(Matrix::diagonal({2, 1, 1, 1}), 1, {"a", "b"}), std::invalid_argument);
  Sampler rng(2);
  for (int i = 0; i < 10; ++i) {
    Rational l;
    Matrix g = random_gsp4(rng, &l);
    CHECK(recover_alpha(g, l, {"a"}).split);
  }
}

TEST_CASE("restriction diagrams") {
  DiagramReport r = restriction_diagrams_commute(1, 20);
  CHECK(r.samples == 20);
  CHECK_MESSAGE(r.pass(), r.failure);
  // identity: both composites are identities
  CHECK(project_to_so5(embed_h1(Matrix::identity(2), Matrix::identity(2))).is_identity());
  CHECK(xi_prime_so4(h1_to_so4(Matrix::identity(2), Matrix::identity(2))).is_identity());
}
