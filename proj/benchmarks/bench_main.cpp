#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "chevalley/integrality.hpp"

using namespace chevalley;

namespace {

char const* const kTypes[] = {"A1", "A2", "B2", "G2", "A3", "C3", "D4"};

std::shared_ptr<LieAlgebra const> algebra(char const* name) {
  return std::make_shared<LieAlgebra const>(std::make_shared<RootSystem const>(CartanType::parse(name)));
}

// Modules are expensive for the larger types, so each is built once per process.
std::shared_ptr<WeightModule const> sc_default(char const* name) {
  static std::map<std::string, std::shared_ptr<WeightModule const>> cache;
  auto& m = cache[name];
  if (!m) {
    auto g = algebra(name);
    m = std::make_shared<WeightModule const>(g, WeightModule::sc_default_weights(g->roots()));
  }
  return m;
}

Rational mixed(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), kind(0, 3);
  static int const dens[] = {1, 2, 3, 5};
  return Rational(num(rng), dens[kind(rng)]);
}

Word positive_word(RootSystem const& rs, std::mt19937& rng) {
  Word w;
  for (int k : height_order(rs)) w.push_back(Letter::chi(k, mixed(rng)));
  return w;
}

Word simple_word(RootSystem const& rs, std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> kind(0, 2), simple(0, rs.rank() - 1);
  Word w;
  while (static_cast<int>(w.size()) < length) {
    int i = simple(rng);
    Rational t = mixed(rng);
    if (t.is_zero()) continue;
    switch (kind(rng)) {
      case 0: w.push_back(Letter::chi(rs.simple_root(i), t)); break;
      case 1: w.push_back(Letter::chi(rs.negative(rs.simple_root(i)), t)); break;
      default: w.push_back(Letter::torus(i, t)); break;
    }
  }
  return w;
}

void BM_ModuleBuild(benchmark::State& state) {
  auto g = algebra(kTypes[state.range(0)]);
  auto weights = WeightModule::sc_default_weights(g->roots());
  for (auto _ : state) {
    WeightModule m(g, weights);
    benchmark::DoNotOptimize(m.dim());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_ModuleBuild)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_LatticeBuild(benchmark::State& state) {
  auto m = sc_default(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(*m));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_LatticeBuild)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_UnipotentIntegrality(benchmark::State& state) {
  auto m = sc_default(kTypes[state.range(0)]);
  std::mt19937 rng(1);
  for (auto _ : state) {
    GroupElement u(m, positive_word(m->roots(), rng));
    benchmark::DoNotOptimize(unipotent_integrality(u).integral);
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_UnipotentIntegrality)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Stabilizes(benchmark::State& state) {
  auto m = sc_default(kTypes[state.range(0)]);
  auto lat = standard_lattice(*m);
  auto mode = state.range(1) ? StabilizeMode::Exhaustive : StabilizeMode::Auto;
  std::mt19937 rng(2);
  for (auto _ : state) {
    GroupElement u(m, positive_word(m->roots(), rng));
    benchmark::DoNotOptimize(stabilizes(u, lat, mode).stabilizes);
  }
  state.SetLabel(std::string(kTypes[state.range(0)]) + (state.range(1) ? " exhaustive" : " auto"));
}
BENCHMARK(BM_Stabilizes)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Iwasawa(benchmark::State& state) {
  auto m = sc_default(kTypes[state.range(0)]);
  std::mt19937 rng(3);
  for (auto _ : state) {
    auto d = iwasawa_decompose(m, simple_word(m->roots(), rng, 12));
    benchmark::DoNotOptimize(d.gamma.size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Iwasawa)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state) {
  auto m = sc_default(kTypes[state.range(0)]);
  auto lat = standard_lattice(*m);
  std::mt19937 rng(4);
  for (auto _ : state) {
    auto v = integrality_decide(m, lat, simple_word(m->roots(), rng, 12));
    benchmark::DoNotOptimize(v.in_gz);
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Decide)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
