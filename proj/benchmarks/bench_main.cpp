#include <benchmark/benchmark.h>

#include "gsp4/fixtures.hpp"
#include "gsp4/involutions.hpp"
#include "gsp4/oracle.hpp"
#include "gsp4/sampling.hpp"
#include "gsp4/weyl.hpp"

using namespace gsp4;

namespace {

void bm_classify(benchmark::State& state) {
  const CharacterGroup cg = fixture_characters();
  const auto fixtures = type_fixtures(cg);
  for (auto _ : state)
    for (const auto& f : fixtures) benchmark::DoNotOptimize(classify(f.psi));
}
BENCHMARK(bm_classify);

void bm_oracle(benchmark::State& state) {
  const CharacterGroup cg = fixture_characters();
  const auto fixtures = type_fixtures(cg);
  const auto& psi = fixtures[static_cast<std::size_t>(state.range(0))].psi;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(component_group_oracle(psi, GroupTag::gspin_odd(2), seed++));
}
BENCHMARK(bm_oracle)->DenseRange(0, 5);

void bm_factor(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix b = gso_test_form(dim, 1);
  Sampler rng(1);
  std::vector<SimilitudeElement> elems;
  for (int i = 0; i < 16; ++i) elems.push_back(make_similitude(b, random_gso(rng, b)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(elems[i++ % elems.size()]));
}
BENCHMARK(bm_factor)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void bm_enumerate_weyl(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& g : {GroupTag::gl_gl1(4), GroupTag::gspin_even(2), GroupTag::gspin_odd(2), GroupTag::sp_gl1(2)})
      for (const auto& l : enumerate_levis(g))
        for (const auto& w : enumerate_weyl(l)) benchmark::DoNotOptimize(det_w_minus_one(w));
}
BENCHMARK(bm_enumerate_weyl)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
