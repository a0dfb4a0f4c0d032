#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "sokq/diagram.hpp"
#include "sokq/invariants.hpp"
#include "sokq/moves.hpp"
#include "sokq/parse.hpp"
#include "sokq/search.hpp"

namespace {

sokq::SokqPresentation load(const std::string& name) {
  std::ifstream in(std::string(SOKQ_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (name.ends_with(".gauss")) return sokq::gauss_to_sokq(sokq::parse_gauss(ss.str()));
  return sokq::parse_presentation(ss.str());
}

const char* const kFiles[] = {"virtual_trefoil.sokq", "kishino.sokq", "link3.sokq", "trefoil_kink.gauss"};

void BM_CanonicalKey(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sokq::canonical_key(p));
  state.SetLabel(kFiles[state.range(0)]);
}
BENCHMARK(BM_CanonicalKey)->DenseRange(0, 3);

void BM_ApplicableMoves(benchmark::State& state) {
  auto p = load(kFiles[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sokq::applicable_moves(p, sokq::Mode::Welded));
  state.SetLabel(kFiles[state.range(0)]);
}
BENCHMARK(BM_ApplicableMoves)->DenseRange(0, 3);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sokq::enumerate_diagrams(static_cast<int>(state.range(0)), sokq::Mode::Virtual));
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ColoringCount(benchmark::State& state) {
  auto p = load("link3.sokq");
  auto q = sokq::FiniteQuandle::dihedral(5);
  for (auto _ : state) benchmark::DoNotOptimize(sokq::coloring_count(p, q));
}
BENCHMARK(BM_ColoringCount);

void BM_ConnectBigon(benchmark::State& state) {
  auto a = load("bigon_a.sokq"), b = load("bigon_b.sokq");
  sokq::SearchOptions opts;
  opts.max_depth = 4;
  opts.max_crossings = 4;
  for (auto _ : state) benchmark::DoNotOptimize(sokq::connect(a, b, sokq::Mode::Virtual, opts));
}
BENCHMARK(BM_ConnectBigon)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
