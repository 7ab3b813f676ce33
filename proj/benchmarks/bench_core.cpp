#include <benchmark/benchmark.h>

#include <random>

#include "gradnil/nil.hpp"
#include "gradnil/submodule.hpp"
#include "gradnil/words.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

static void BM_PowerChainSut(benchmark::State& state) {
  const Ring r = zoo::sut(static_cast<std::size_t>(state.range(0)), CoeffDomain::prime_field(2)).ring();
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_chain(r, 64));
  }
  state.SetLabel("rank " + std::to_string(r.rank()));
}
BENCHMARK(BM_PowerChainSut)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveNil(benchmark::State& state) {
  const Ring r = matrix_ring(zoo::two_z_2k(static_cast<unsigned>(state.range(0))), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_is_nil(r, Caps{}));
  }
}
BENCHMARK(BM_ExhaustiveNil)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveNilGrassmannM2(benchmark::State& state) {
  const Ring r = matrix_ring(zoo::grassmann_star(2, CoeffDomain::prime_field(3)).ring(), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_is_nil(r, Caps{}));
  }
}
BENCHMARK(BM_ExhaustiveNilGrassmannM2)->Unit(benchmark::kMillisecond);

static void BM_SymbolicNil(benchmark::State& state) {
  const Ring r = zoo::grassmann_star(static_cast<std::size_t>(state.range(0)), CoeffDomain::rationals()).ring();
  const Caps caps;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nil_bounded_index(r, NilMode::Symbolic, caps, 4));
  }
}
BENCHMARK(BM_SymbolicNil)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NeutralDecomposition(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const Monoid mon = Monoid::cyclic(m);
  std::vector<MonoidElement> all;
  for (std::uint32_t g = 0; g < m; ++g) {
    all.emplace_back(static_cast<unsigned long>(g));
  }
  const DegreeSet supp = make_degree_set(all);
  std::mt19937 rng(1);
  std::vector<DegreeWord> words;
  for (int i = 0; i < 256; ++i) {
    std::vector<MonoidElement> degs;
    for (std::size_t k = 0; k < 3 * m; ++k) {
      degs.emplace_back(static_cast<unsigned long>(rng() % m));
    }
    words.emplace_back(mon, degs);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(neutral_decomposition(words[i++ % words.size()], 3, supp));
  }
}
BENCHMARK(BM_NeutralDecomposition)->Arg(2)->Arg(4)->Arg(8);

static void BM_OracleDecomposition(benchmark::State& state) {
  const Monoid mon = Monoid::cyclic(4);
  const DegreeSet supp = make_degree_set({0, 1, 2, 3});
  std::mt19937 rng(1);
  std::vector<DegreeWord> words;
  for (int i = 0; i < 256; ++i) {
    std::vector<MonoidElement> degs;
    for (int k = 0; k < 12; ++k) {
      degs.emplace_back(static_cast<unsigned long>(rng() % 4));
    }
    words.emplace_back(mon, degs);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_decomposition(words[i++ % words.size()], 3, supp));
  }
}
BENCHMARK(BM_OracleDecomposition);

static void BM_HowellForm(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const CoeffDomain dom = CoeffDomain::zmod(72);
  std::mt19937 rng(3);
  std::vector<Vector> gens(dim, Vector(dim));
  for (auto& row : gens) {
    for (auto& x : row) {
      x = Scalar(static_cast<long>(rng() % 72));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Submodule::span(dom, dim, gens));
  }
}
BENCHMARK(BM_HowellForm)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
