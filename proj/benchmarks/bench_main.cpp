#include <benchmark/benchmark.h>

#include <random>

#include "oreaut/eigengroup.hpp"
#include "oreaut/lambda_aut.hpp"
#include "oreaut/modules.hpp"
#include "oreaut/ore.hpp"
#include "oreaut/parse.hpp"

using namespace oreaut;

namespace {

std::vector<Poly> sample(unsigned p, unsigned m, int deg, int count) {
  auto F = Field::make(p, m);
  std::mt19937_64 rng(2020);
  std::vector<Poly> out;
  for (int t = 0; t < count; ++t) {
    std::vector<Elem> c(deg + 1, 1);
    for (int i = 0; i < deg; ++i) c[i] = static_cast<Elem>(rng() % F->size());
    out.emplace_back(F, c);
  }
  return out;
}

// args: p, m, degree
void BM_EigengroupStructured(benchmark::State& st) {
  auto polys = sample(st.range(0), st.range(1), st.range(2), 64);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(group_elements(eigengroup(polys[i++ % polys.size()])));
}

void BM_EigengroupBruteforce(benchmark::State& st) {
  auto polys = sample(st.range(0), st.range(1), st.range(2), 64);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(eigengroup_bruteforce(polys[i++ % polys.size()], 1 << 20));
}

void BM_ShiftWitness(benchmark::State& st) {
  // V spanned by 1, t, ..., t^{r-1} inside GF(2^m), r = m - 1
  const unsigned m = static_cast<unsigned>(st.range(0));
  auto F = Field::make(2, m);
  SubgroupSpec H{SubgroupSpec::Shape::Shift, F, 1, 0, {}, SubgroupSpec::ShiftWitness::OffImage};
  for (unsigned i = 0; i + 1 < m; ++i) H.V_basis.push_back(static_cast<Elem>(ipow(2, i)));
  Poly f = inverse_eigengroup(H);
  for (auto _ : st) benchmark::DoNotOptimize(eigengroup(f));
}

void BM_CentreGenerators(benchmark::State& st) {
  OreAlgebra A(sample(st.range(0), 1, st.range(1), 1)[0]);
  for (auto _ : st) benchmark::DoNotOptimize(centre_generators(A));
}

void BM_OreMultiply(benchmark::State& st) {
  auto F = Field::make(5, 1);
  OreAlgebra A(parse_poly(F, "x^3 + 2*x + 1"));
  auto a = A.pow(A.add(A.x(), A.y()), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(A.mul(a, a));
}

void BM_IsomorphismTest(benchmark::State& st) {
  auto polys = sample(st.range(0), 1, 3, 32);
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(are_isomorphic(polys[i % polys.size()], polys[(i * 7 + 3) % polys.size()]));
    ++i;
  }
}

void BM_OffFModule(benchmark::State& st) {
  auto F = Field::make(st.range(0), 2);
  Poly f = Poly(F, {2, 1, 1});
  Elem xi = 0;
  while (f.eval(pth_root(*F, xi)) == 0) ++xi;
  for (auto _ : st) benchmark::DoNotOptimize(simple_module_off_f(f, xi, 1));
}

}  // namespace

BENCHMARK(BM_EigengroupStructured)->Args({2, 1, 5})->Args({3, 1, 5})->Args({2, 4, 4})->Args({3, 3, 3})->Args({2, 8, 2});
BENCHMARK(BM_EigengroupBruteforce)->Args({2, 1, 5})->Args({3, 1, 5})->Args({2, 4, 4})->Args({3, 3, 3});
BENCHMARK(BM_ShiftWitness)->Arg(3)->Arg(6)->Arg(10);
BENCHMARK(BM_CentreGenerators)->Args({3, 3})->Args({7, 3})->Args({13, 4});
BENCHMARK(BM_OreMultiply)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_IsomorphismTest)->Arg(3)->Arg(7)->Arg(13);
BENCHMARK(BM_OffFModule)->Arg(2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
