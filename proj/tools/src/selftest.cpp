#include <sstream>

#include "commands.hpp"
#include "gsp4/endoscopy.hpp"
#include "gsp4/fixtures.hpp"
#include "gsp4/involutions.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/oracle.hpp"
#include "gsp4/restriction.hpp"
#include "gsp4/sampling.hpp"
#include "gsp4/weyl.hpp"

namespace gsp4::cli {

namespace {

Matrix random_matrix(Sampler& rng, std::size_t rows, std::size_t cols, long bound) {
  std::vector<Vector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(rng.vector(cols, bound));
  return Matrix::from_rows(r);
}

Matrix random_invertible(Sampler& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, 3);
    if (invertible(m)) return m;
  }
}

std::string count(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

void exactlin_checks(Sampler& rng, Report& r) {
  int ok = 0;
  const int trials = 30;
  for (int t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(rng.integer(2, 6)), cols = static_cast<std::size_t>(rng.integer(2, 6));
    const auto inner = static_cast<std::size_t>(rng.integer(1, 4));
    Matrix m = random_matrix(rng, rows, inner, 4) * random_matrix(rng, inner, cols, 4);
    auto ker = kernel(m);
    bool good = rank(m) + ker.size() == cols && independent_subset(ker).size() == ker.size();
    for (const auto& v : ker)
      for (const auto& x : m * v) good = good && is_zero(x);
    ok += good;
  }
  r.check("exactlin.kernel rank-nullity", ok == trials, count(ok, trials));

  ok = 0;
  for (int t = 0; t < 10; ++t) {
    std::vector<Matrix> gens = {random_matrix(rng, 4, 4, 2)};
    if (rng.coin()) gens.push_back(gens[0] * gens[0] + Matrix::identity(4));
    Matrix p = random_invertible(rng, 4), pinv = inverse(p);
    std::vector<Matrix> conj;
    for (const auto& g : gens) conj.push_back(p * g * pinv);
    ok += commutant_dimension(gens, LinearConstraints::all(4)) == commutant_dimension(conj, LinearConstraints::all(4));
  }
  r.check("exactlin.commutant conjugation invariance", ok == 10, count(ok, 10));

  ok = 0;
  for (int t = 0; t < 10; ++t) {
    Matrix d = direct_sum({Matrix{{0, -1}, {1, 0}}, Matrix::diagonal({rng.rational(3), rng.rational(3)}),
                           Matrix{{1, 1}, {0, 1}}});
    Matrix p = random_invertible(rng, 6);
    Matrix g = p * d * inverse(p);
    EigenSplit es = rational_eigensplit(g);
    std::vector<Vector> all = es.irrational;
    bool good = es.irrational.size() == 2;
    for (const auto& b : es.rational) {
      all.insert(all.end(), b.basis.begin(), b.basis.end());
      good = good && restrict_to(g, b.basis).rows() == b.basis.size();
    }
    good = good && independent_subset(all).size() == 6 && all.size() == 6;
    ok += good;
  }
  r.check("exactlin.eigensplit direct sum", ok == 10, count(ok, 10));
}

void dualgroup_checks(Sampler& rng, Report& r) {
  int ok = 0;
  for (int t = 0; t < 20; ++t) {
    DualElement e{random_invertible(rng, 4), rng.nonzero_rational(3)};
    ok += apply_theta(apply_theta(e)) == e;
  }
  r.check("dualgroups.theta involution", ok == 20, count(ok, 20));

  ok = 0;
  const Matrix j = j_matrix(4);
  for (int t = 0; t < 20; ++t) {
    Rational lambda;
    Matrix g = t % 2 ? random_gsp4(rng, &lambda) : random_invertible(rng, 4);
    if (t % 2 == 0) lambda = rng.nonzero_rational(2);
    DualElement e{g, lambda};
    ok += fixed_point_check(e) == (g.transpose() * j * g == j * lambda);
  }
  r.check("dualgroups.fixed points are J-similitudes", ok == 20, count(ok, 20));

  ok = 0;
  for (int t = 0; t < 10; ++t) {
    Rational l1, l2;
    Matrix a = random_gsp4(rng, &l1), b = random_gsp4(rng, &l2);
    DualElement e1{a, l1}, e2{b, l2};
    const Rational c = rng.nonzero_rational(3);
    DualElement centre{Matrix::scalar(4, c), c * c};
    ok += project_to_so5(e1 * e2) == project_to_so5(e1) * project_to_so5(e2) &&
          project_to_so5(centre).is_identity();
  }
  r.check("dualgroups.pr multiplicative, kills the centre", ok == 10, count(ok, 10));

  PinningReport p = pinning_fixed_by_theta();
  r.check("dualgroups.pinning fixed by theta", p.pass, p.failing);
}

void endoscopy_checks(std::uint64_t seed, bool corrupt, Report& r) {
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin5, EndoscopicAmbient::GSpin4}) {
    for (auto d : catalog(amb)) {
      if (corrupt && d.name == "GSpin4^alpha") d.s.g(0, 0) = 2;
      CentralizerReport c = verify_centralizer(d, seed);
      r.check("endoscopy.centralizer " + c.datum, c.pass(),
              "dim " + std::to_string(c.computed) + (c.failure.empty() ? "" : " (" + c.failure + ")"));
    }
  }
  std::string iotas;
  bool iota_ok = true;
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin5})
    for (const auto& d : catalog(amb))
      if (d.iota) {
        iotas += (iotas.empty() ? "" : ", ") + d.name + " " + to_string(*d.iota);
        iota_ok = iota_ok && *d.iota == (amb == EndoscopicAmbient::GSpin5 ? Rational(1, 4) : Rational(1));
      }
  r.check("endoscopy.iota", iota_ok, iotas);

  DiagramReport dr = restriction_diagrams_commute(seed, 20);
  r.check("endoscopy.restriction diagrams", dr.pass(),
          count(dr.first_square_ok, dr.samples) + ", " + count(dr.second_square_ok, dr.samples));

  Sampler rng(seed);
  int ok = 0;
  for (int t = 0; t < 10; ++t) {
    Rational lambda;
    Matrix g = random_gsp4(rng, &lambda);
    ok += recover_alpha(g, lambda, {"a"}).split;
  }
  r.check("endoscopy.GSpin5 images split", ok == 10, count(ok, 10));
}

void params_checks(std::uint64_t seed, Report& r) {
  const CharacterGroup cg = fixture_characters();
  const GroupTag g5 = GroupTag::gspin_odd(2);
  for (const auto& f : type_fixtures(cg)) {
    Classification c = classify(f.psi);
    const bool big = f.type == ArthurType::Yoshida || f.type == ArthurType::SaitoKurokawa ||
                     f.type == ArthurType::HowePS;
    const bool ok = c.type == f.type && c.s_group.order() == (big ? 2u : 1u) &&
                    c.epsilon == trivial_character(c.s_group);
    const std::string tag = to_string(f.type) + " (" + remark_letter(f.type) + ")";
    r.check("params.classify " + tag, ok, "S_psi order " + std::to_string(c.s_group.order()) + " eps " +
                                              describe(c.epsilon));
    OracleAgreement a = compare_with_table(component_group_oracle(f.psi, g5, seed), c.s_group, c.s_psi);
    r.check("params.oracle " + tag, a.pass(), a.detail);
  }
  {
    Classification c = classify(saito_kurokawa_fixture(cg, true));
    r.check("params.classify " + to_string(ArthurType::SaitoKurokawa) + " (d) root number -1",
            c.epsilon != trivial_character(c.s_group) && respects_relations(c.s_group, c.epsilon),
            "eps " + describe(c.epsilon));
  }

  // exhaustive local sign patterns
  const FormalParameter flat = type_fixtures(cg)[1].psi, twisted = saito_kurokawa_fixture(cg, true);
  bool counts_ok = true, flipped = true;
  for (int k = 1; k <= 3; ++k) {
    int hit[2] = {0, 0};
    for (unsigned pattern = 0; pattern < (1u << k); ++pattern) {
      int m[2];
      int i = 0;
      for (const FormalParameter* psi : {&flat, &twisted}) {
        TwoGroup g = s_group_table(*psi, g5);
        TwoGroupCharacter sgn = all_characters(g).back();
        std::vector<LocalDatum> local;
        for (int v = 0; v < k; ++v)
          local.push_back({"v" + std::to_string(v), pattern >> v & 1 ? sgn : trivial_character(g)});
        m[i] = multiplicity(*psi, g5, local);
        hit[i] += m[i] > 0;
        ++i;
      }
      flipped = flipped && (m[0] > 0) != (m[1] > 0);
    }
    counts_ok = counts_ok && hit[0] == (1 << (k - 1)) && hit[1] == (1 << (k - 1));
  }
  r.check("params.multiplicity sign patterns k=1..3", counts_ok && flipped);

  const FormalParameter even = gspin4_even_fixture(cg);
  const GroupTag g4 = gspin4_even_target();
  r.check("params.m_psi GSpin4 all N even", m_psi(even, g4) == 2 && multiplicity(even, g4, {}) == 2,
          "m_psi " + std::to_string(m_psi(even, g4)));

  int ok = 0, total = 0;
  for (const auto& f : type_fixtures(cg)) {
    FormalParameter rev = f.psi;
    std::reverse(rev.summands.begin(), rev.summands.end());
    ++total;
    ok += psi_disc_membership(cg, f.psi, g5).member && psi_disc_membership(cg, rev, g5).member;
  }
  r.check("params.membership order independent", ok == total, count(ok, total));
}

void weyl_checks(Report& r) {
  for (const auto& g : {GroupTag::gl_gl1(4), GroupTag::gspin_even(2), GroupTag::gspin_odd(2), GroupTag::sp_gl1(2)}) {
    int total = 0, mismatches = 0;
    for (const auto& l : enumerate_levis(g))
      for (const auto& w : enumerate_weyl(l)) {
        ++total;
        mismatches += is_regular(w) == is_zero(det_w_minus_one(w));
      }
    r.check("weyl.regular iff det " + g.name(), mismatches == 0,
            std::to_string(total) + " elements, " + std::to_string(mismatches) + " mismatches");
  }
  Rational yoshida = 0;
  for (const auto& l : enumerate_levis(GroupTag::gl_gl1(4)))
    if (l.blocks == std::vector<int>{2, 2})
      for (const auto& w : enumerate_weyl(l))
        if (w.theta0 && w.classes.front().sigma == std::vector<int>{0, 1}) yoshida = det_factor(w);
  r.check("weyl.Yoshida det factor", yoshida == 2, to_string(yoshida));
}

void restriction_checks(std::uint64_t seed, Report& r) {
  for (auto sh : all_bounded_shapes()) {
    auto phi = make_descriptor(sh, sample_generators(sh, seed));
    CountReport c = restriction_count_identity(phi, project_parameter(phi));
    r.check("restriction.partition " + to_string(sh), c.pass(),
            "|S_phi'^| " + std::to_string(c.dual_size) + (c.failure.empty() ? "" : " (" + c.failure + ")"));
  }
  for (auto sh : all_gso4_shapes()) {
    Gso4Restriction g = restrict_gso4(sample_gso4_generators(sh, seed));
    r.check("restriction.gso4 " + to_string(sh),
            g.constituents.size() == all_characters(g.s_group_prime.group).size(),
            std::to_string(g.constituents.size()) + " constituents");
  }
}

void involution_checks(std::uint64_t seed, int samples, Report& r) {
  Sampler rng(seed);
  for (std::size_t dim : {2, 4, 6, 8}) {
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
      const Matrix b = gso_test_form(dim, i % 3);
      try {
        SimilitudeElement e = make_similitude(b, random_gso(rng, b));
        ok += verify(e, factor(e));
      } catch (const std::exception&) {
      }
    }
    r.check("involutions.factor dim " + std::to_string(dim), ok == samples, count(ok, samples));
  }
  // scalar g: x = 1 when n is even, a reflection when n is odd; y = x g either way
  bool edge = true;
  for (std::size_t dim : {2, 4, 6, 8}) {
    const Matrix b = gso_test_form(dim, 1);
    for (const Rational& c : {Rational(1), Rational(-3)}) {
      const Matrix g = Matrix::scalar(dim, c);
      InvolutionPair p = factor(make_similitude(b, g));
      const bool x_ok = dim % 4 == 0 ? p.x.is_identity() : rank(p.x - Matrix::identity(dim)) == 1;
      edge = edge && x_ok && p.y == p.x * g;
    }
  }
  r.check("involutions.identity and scalar normal forms", edge);
}

}  // namespace

Report selftest(const SelftestOptions& opts) {
  Report r;
  r.add("selftest seed " + std::to_string(opts.seed));
  Sampler rng(opts.seed);
  exactlin_checks(rng, r);
  dualgroup_checks(rng, r);
  endoscopy_checks(opts.seed, opts.corrupt_catalog, r);
  params_checks(opts.seed, r);
  weyl_checks(r);
  restriction_checks(opts.seed, r);
  involution_checks(opts.seed, opts.involution_samples, r);
  std::size_t failures = 0;
  for (const auto& rec : r.records) failures += !rec.at("pass").get<bool>();
  r.add("selftest " + std::string(r.failed ? "FAILED" : "passed") + ": " + std::to_string(r.records.size()) +
        " checks, " + std::to_string(failures) + " failed");
  return r;
}

}  // namespace gsp4::cli
