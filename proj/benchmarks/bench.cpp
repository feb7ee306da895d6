#include "blfilt/cli.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace blfilt;

// Four-element chain used across the benchmarks; kept inline so the binary
// needs no data files.
const char* const kChain = R"(
algebra bench_chain
elements 0 a b 1
bottom 0
top 1
odot:
0 0 0 0
0 0 a a
0 a b b
0 a b 1
imp:
1 1 1 1
a 1 1 1
0 a 1 1
0 a b 1
end
)";

const FiniteBLAlgebra& chain() {
  static const FiniteBLAlgebra alg = parse_algebra(kChain);
  return alg;
}

FuzzySet chain_set() {
  return parse_fuzzy_set("fuzzyset bench over bench_chain\n0 = 1/5\na = 2/5\nb = 4/5\n1 = 3/5\nend\n",
                         chain());
}

void BM_validate(benchmark::State& state) {
  const FiniteBLAlgebra& alg = chain();
  for (auto _ : state) {
    AxiomReport report = validate_bl(alg);
    benchmark::DoNotOptimize(report.valid);
  }
}
BENCHMARK(BM_validate);

void BM_classify(benchmark::State& state) {
  FuzzySet f = chain_set();
  for (auto _ : state) {
    TaxonomyRecord rec = classify(f);
    benchmark::DoNotOptimize(rec.verdict[0][0]);
  }
}
BENCHMARK(BM_classify);

void BM_profile(benchmark::State& state) {
  FuzzySet f = chain_set();
  for (auto _ : state) {
    IntervalSet profile = threshold_profile(f, FilterKind::Plain);
    benchmark::DoNotOptimize(profile.parts().size());
  }
}
BENCHMARK(BM_profile);

void BM_enumerate_filters(benchmark::State& state) {
  const FiniteBLAlgebra& alg = chain();
  for (auto _ : state) {
    std::vector<CrispSubset> filters = enumerate_filters(alg, FilterKind::Plain);
    benchmark::DoNotOptimize(filters.size());
  }
}
BENCHMARK(BM_enumerate_filters);

void BM_verify_equivalences(benchmark::State& state) {
  const FiniteBLAlgebra& alg = chain();
  GridSpec grid{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    EquivalenceReport report = verify_equivalences(alg, grid);
    benchmark::DoNotOptimize(report.all_pass);
  }
}
BENCHMARK(BM_verify_equivalences)->Arg(2)->Arg(3);

void BM_generate(benchmark::State& state) {
  for (auto _ : state) {
    std::vector<FiniteBLAlgebra> algebras = generate_bl_algebras(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(algebras.size());
  }
}
BENCHMARK(BM_generate)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
