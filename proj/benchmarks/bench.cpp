#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "twoorbit/catalog.hpp"
#include "twoorbit/genus0.hpp"
#include "twoorbit/monodromy.hpp"
#include "twoorbit/twocycle.hpp"

using namespace twoorbit;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  Permutation a = random_perm(n, rng), b = random_perm(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(64)->Arg(256);

void BM_ChainBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  std::vector<Permutation> gens{Permutation(cyc), Permutation(tr)};
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup(n, gens));
}
BENCHMARK(BM_ChainBuild)->Arg(8)->Arg(16)->Arg(32);

void BM_ElementScan(benchmark::State& state) {
  PermGroup G = parse_group_spec("M11").group;
  for (auto _ : state) {
    long count = 0;
    G.for_each_element([&](const Permutation&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ElementScan);

void BM_TwoCycleScan(benchmark::State& state) {
  PermGroup G = parse_group_spec("M11").group;
  for (auto _ : state) benchmark::DoNotOptimize(two_cycle_pairs(G));
}
BENCHMARK(BM_TwoCycleScan);

void BM_RootFinding(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::complex<double>> coeffs(n + 1);
  for (auto& c : coeffs) c = {uni(rng), uni(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(coeffs));
}
BENCHMARK(BM_RootFinding)->Arg(8)->Arg(16)->Arg(32);

void BM_Genus0Enumeration(benchmark::State& state) {
  PermGroup G = parse_group_spec("PGL(2,5)").group;
  Permutation anchor(6);
  for (const auto& c : G.conjugacy_classes())
    if (c.rep.cycle_type() == CycleType::parse("5-1")) anchor = c.rep;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_genus0_types(G, anchor));
}
BENCHMARK(BM_Genus0Enumeration);

void BM_Monodromy(benchmark::State& state) {
  RationalFunction f = parse_ratfunc("Z^5*(Z-2)/(Z^2-5)^3");
  for (auto _ : state) benchmark::DoNotOptimize(compute_monodromy(f));
}
BENCHMARK(BM_Monodromy);

}  // namespace

BENCHMARK_MAIN();
