#include <benchmark/benchmark.h>

#include "k3dream/an.hpp"
#include "k3dream/linalg.hpp"
#include "k3dream/mori.hpp"
#include "k3dream/qform.hpp"
#include "k3dream/quadric.hpp"

using namespace k3dream;

namespace {

void BM_ReducedCycle(benchmark::State& state) {
  QForm f{1, 1, -(static_cast<long>(state.range(0)) - 1) / 4};
  for (auto _ : state) {
    auto cycle = reduced_cycle(f);
    benchmark::DoNotOptimize(cycle);
  }
}
BENCHMARK(BM_ReducedCycle)->Arg(817)->Arg(3601)->Arg(99221);

void BM_Pell4(benchmark::State& state) {
  Int delta(state.range(0));
  for (auto _ : state) {
    PellSolution p = pell4(delta);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Pell4)->Arg(17)->Arg(97)->Arg(1021);

void BM_RepresentsMinusOne(benchmark::State& state) {
  QForm f{6, -1, -4}; // witness far outside small boxes
  for (auto _ : state) {
    auto w = represents_minus_one(f);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_RepresentsMinusOne);

void BM_EnumerateQuadric(benchmark::State& state) {
  RatMatrix sub{{Rat(-12), Rat(-2), Rat(-2)},
                {Rat(-2), Rat(-2), Rat(0)},
                {Rat(-2), Rat(0), Rat(-2)}};
  QuadricSpec q(sub, RatVector(3), Rat(0), Rat(-2));
  for (auto _ : state) {
    auto sols = enumerate_quadric(q);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_EnumerateQuadric);

void BM_HermiteNormalForm(benchmark::State& state) {
  IntMatrix m(4, 4);
  long seed = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      seed = (seed * 1103515245 + 12345) % 191;
      m.at(i, j) = seed - 95;
    }
  for (auto _ : state) {
    auto hnf = hermite_normal_form(m);
    benchmark::DoNotOptimize(hnf);
  }
}
BENCHMARK(BM_HermiteNormalForm);

void BM_AmbiguityScan(benchmark::State& state) {
  ambiguity_scan(1); // warm the model cache outside the loop
  for (auto _ : state) {
    auto rows = ambiguity_scan(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_AmbiguityScan)->Arg(18)->Arg(30);

void BM_MumfordPullback(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  IntMatrix gram(n + 1, n + 1);
  gram.at(0, 0) = 4;
  std::vector<std::size_t> exceptional;
  for (unsigned i = 1; i <= n; ++i) {
    gram.at(i, i) = -2;
    if (i + 1 <= n) {
      gram.at(i, i + 1) = 1;
      gram.at(i + 1, i) = 1;
    }
    exceptional.push_back(i);
  }
  gram.at(0, 1) = gram.at(1, 0) = 1;
  ResolutionModel model(gram, exceptional);
  IntVector dbar(n + 1);
  dbar[0] = 1;
  for (auto _ : state) {
    RatVector pulled = mumford_pullback(model, dbar);
    benchmark::DoNotOptimize(pulled);
  }
}
BENCHMARK(BM_MumfordPullback)->Arg(5)->Arg(15);

} // namespace

BENCHMARK_MAIN();
