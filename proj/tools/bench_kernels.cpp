// Serial versus OpenMP timings for the parallel kernels.

#include <benchmark/benchmark.h>

#include "phiirred/certifier.hpp"
#include "phiirred/oracle.hpp"
#include "phiirred/poly_io.hpp"
#include "phiirred/schur.hpp"

using namespace phiirred;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_Certify(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(1));
    const ProblemInstance inst{0, n, IntPoly::x(), 1, std::vector<IntPoly>(n, IntPoly::constant(1)), std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(certify(inst, mode(state)));
}
BENCHMARK(BM_Certify)->ArgsProduct({{0, 1}, {10, 30}})->Unit(benchmark::kMillisecond);

void BM_DegreeSieve(benchmark::State& state) {
    const IntPoly f = pow(parse_inline("x^3 - x + 37"), 6) + IntPoly::constant(3);
    for (auto _ : state) benchmark::DoNotOptimize(degree_sieve(f, 25, mode(state)));
}
BENCHMARK(BM_DegreeSieve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SchurScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(schur_exception_scan(10, 5000, mode(state)));
}
BENCHMARK(BM_SchurScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
