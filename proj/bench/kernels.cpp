// Serial reference vs OpenMP kernels. Arg(0) is the serial path, Arg(t) runs
// the parallel entry point on t threads.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fsig/dense_rank.hpp"
#include "fsig/hk.hpp"
#include "fsig/staircase.hpp"

using namespace fsig;

namespace {

std::vector<Monomial> staircase_generators() {
  std::mt19937_64 rng(7);
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < 4; ++v) {
    Monomial m(4);
    m.set(v, 60);
    gens.push_back(m);
  }
  for (int i = 0; i < 400; ++i) {
    Monomial m(4);
    for (std::size_t v = 0; v < 4; ++v) m.set(v, static_cast<std::uint32_t>(rng() % 60));
    gens.push_back(m);
  }
  return gens;
}

DenseMatrix random_matrix(std::size_t n, std::uint32_t p) {
  std::mt19937_64 rng(11);
  DenseMatrix m(n, n);
  for (auto& x : m.data) x = static_cast<std::uint32_t>(rng() % p);
  return m;
}

void BM_CountStandardMonomials(benchmark::State& state) {
  auto gens = staircase_generators();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto n = threads == 0 ? count_standard_monomials_serial(gens, 4) : count_standard_monomials(gens, 4, threads);
    benchmark::DoNotOptimize(n);
  }
}

void BM_RankModP(benchmark::State& state) {
  DenseMatrix m = random_matrix(600, 32003);
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t r = threads == 0 ? rank_mod_p_serial(m, 32003) : rank_mod_p(m, 32003, threads);
    benchmark::DoNotOptimize(r);
  }
}

void BM_UniformProbe(benchmark::State& state) {
  RingPresentation R(5, {"x", "y"}, {"x*y"});
  ProbeOptions opt;
  opt.samples = 20;
  opt.seed = 3;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ProbeReport rep = opt.jobs == 0 ? uniform_constant_probe_serial(R, opt) : uniform_constant_probe(R, opt);
    benchmark::DoNotOptimize(rep.empirical_C);
  }
}

}  // namespace

BENCHMARK(BM_CountStandardMonomials)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModP)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformProbe)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
