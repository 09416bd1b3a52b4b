#include <benchmark/benchmark.h>

#include "fgc/classes.hpp"
#include "fgc/structure.hpp"
#include "fgc/subgroup_enum.hpp"
#include "fgc/zoo.hpp"

namespace {

// Stabilizer chain only; the element table is built lazily and not touched.
void BM_SchreierSims(benchmark::State& state, const char* name) {
  const auto gens = fgc::construct(name).generators();
  for (auto _ : state) {
    fgc::Group g(gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK_CAPTURE(BM_SchreierSims, S6, "S6");
BENCHMARK_CAPTURE(BM_SchreierSims, M11, "M11");
BENCHMARK_CAPTURE(BM_SchreierSims, SL_2_13, "SL(2,13)");

void BM_ElementTable(benchmark::State& state, const char* name) {
  const auto gens = fgc::construct(name).generators();
  for (auto _ : state) {
    fgc::Group g(gens);
    benchmark::DoNotOptimize(g.elements().size());
  }
}
BENCHMARK_CAPTURE(BM_ElementTable, PSL_2_7, "PSL(2,7)");
BENCHMARK_CAPTURE(BM_ElementTable, M11, "M11");

void BM_AllSubgroupClasses(benchmark::State& state, const char* name) {
  const auto gens = fgc::construct(name).generators();
  for (auto _ : state) {
    fgc::Group g(gens);
    benchmark::DoNotOptimize(fgc::all_subgroup_classes(g).size());
  }
}
BENCHMARK_CAPTURE(BM_AllSubgroupClasses, S4, "S4");
BENCHMARK_CAPTURE(BM_AllSubgroupClasses, A5, "A5");
BENCHMARK_CAPTURE(BM_AllSubgroupClasses, PSL_2_8, "PSL(2,8)");

void BM_Sylow(benchmark::State& state, const char* name) {
  const fgc::Group g = fgc::construct(name);
  g.elements();
  for (auto _ : state) benchmark::DoNotOptimize(fgc::sylow_subgroup(g, 2).order());
}
BENCHMARK_CAPTURE(BM_Sylow, SL_2_7, "SL(2,7)");
BENCHMARK_CAPTURE(BM_Sylow, M11, "M11");

void BM_Decide(benchmark::State& state, const char* name, fgc::ClassId c) {
  const auto gens = fgc::construct(name).generators();
  for (auto _ : state) {
    fgc::Group g(gens);
    benchmark::DoNotOptimize(fgc::decide(g, c).kind);
  }
}
BENCHMARK_CAPTURE(BM_Decide, SL_2_7_A_pi, "SL(2,7)", fgc::ClassId::A_pi);
BENCHMARK_CAPTURE(BM_Decide, E25_SL_2_3_B, "E25:SL(2,3)", fgc::ClassId::B);
BENCHMARK_CAPTURE(BM_Decide, M11_A_pi, "M11", fgc::ClassId::A_pi);

}  // namespace
BENCHMARK_MAIN();
