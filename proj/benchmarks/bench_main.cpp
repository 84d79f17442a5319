#include <benchmark/benchmark.h>

#include "thetamirror/broken_lines.hpp"
#include "thetamirror/json_io.hpp"
#include "thetamirror/theta_algebra.hpp"

using namespace thetamirror;

namespace {

std::string fixture(const std::string& name) { return std::string(THETAMIRROR_FIXTURE_DIR) + "/" + name; }

PairDescriptor blowup() { return io::pair_from_json(io::read_json(fixture("blowup.json"))); }

LatticeVector e(std::size_t i) { return LatticeVector::unit(4, i); }

}  // namespace

static void BM_Candidates(benchmark::State& state) {
  auto pair = blowup();
  auto space = tropicalize(pair);
  auto I = TruncationIdeal::uniform(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(candidates(pair, space, e(1), e(3), I));
}
BENCHMARK(BM_Candidates)->Arg(3)->Arg(5)->Arg(7);

static void BM_ThetaProductTable(benchmark::State& state) {
  auto pair = blowup();
  auto table = io::table_from_json(io::read_json(fixture("blowup_N_full.json")), pair);
  ThetaAlgebra A(pair, table, TruncationIdeal::uniform(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(A.product(e(1), e(3)));
}
BENCHMARK(BM_ThetaProductTable);

static void BM_Associativity(benchmark::State& state) {
  auto pair = blowup();
  auto table = io::table_from_json(io::read_json(fixture("blowup_N_full.json")), pair);
  ThetaAlgebra A(pair, table, TruncationIdeal::uniform(3, 3));
  std::vector<LatticeVector> pts{LatticeVector(4), e(0), e(1), e(2), e(3)};
  for (auto _ : state) benchmark::DoNotOptimize(A.associativity_check(pts));
}
BENCHMARK(BM_Associativity);

static void BM_BrokenLines(benchmark::State& state) {
  auto pair = blowup();
  auto s = io::walls_from_json(io::read_json(fixture("blowup_walls.json")), &pair,
                               TruncationIdeal::uniform(3, state.range(0)));
  RationalPoint q{make_rational(1, 3), make_rational(2, 3), Rational(0), Rational(0)};
  LatticeVector p{0, 0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(s, p, q));
}
BENCHMARK(BM_BrokenLines)->Arg(3)->Arg(5);

static void BM_BrokenLineProduct(benchmark::State& state) {
  auto pair = blowup();
  auto s = io::walls_from_json(io::read_json(fixture("blowup_walls.json")), &pair);
  for (auto _ : state) benchmark::DoNotOptimize(theta_product(s, e(1), e(3), {.seed = 1}));
}
BENCHMARK(BM_BrokenLineProduct);

static void BM_PlanarCompletion(benchmark::State& state) {
  auto s = io::walls_from_json(io::read_json(fixture("gps2.json")), nullptr,
                               TruncationIdeal::uniform(2, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complete(s));
}
BENCHMARK(BM_PlanarCompletion)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK_MAIN();
