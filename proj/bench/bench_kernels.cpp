// Serial reference versus OpenMP kernels on exact scalars.

#include <benchmark/benchmark.h>

#include "leonard/kernels.hpp"
#include "leonard/parray.hpp"
#include "leonard/transition.hpp"

namespace {

using namespace leonard;

Matrix sample(const FieldSpec& f, std::size_t n, long seed) {
    return Matrix::generate(f, n, [&](std::size_t i, std::size_t j) {
        const long v = static_cast<long>((i * 31 + j * 17 + static_cast<std::size_t>(seed)) % 23) - 11;
        return Scalar(f, v) / Scalar(f, static_cast<long>(i + j + 1));
    });
}

void multiply_args(benchmark::internal::Benchmark* b) {
    for (int n : {16, 32, 64}) b->Arg(n);
}

void BM_MultiplySerial(benchmark::State& state) {
    const FieldSpec f = FieldSpec::rational();
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = sample(f, n, 1);
    const Matrix b = sample(f, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, b));
}
BENCHMARK(BM_MultiplySerial)->Apply(multiply_args);

void BM_MultiplyParallel(benchmark::State& state) {
    const FieldSpec f = FieldSpec::rational();
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = sample(f, n, 1);
    const Matrix b = sample(f, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b));
}
BENCHMARK(BM_MultiplyParallel)->Apply(multiply_args);

void BM_ScriptPTableSerial(benchmark::State& state) {
    const ParameterArray p = krawtchouk_array(static_cast<std::size_t>(state.range(0)), FieldSpec::rational());
    for (auto _ : state) benchmark::DoNotOptimize(script_p_table_serial(p));
}
BENCHMARK(BM_ScriptPTableSerial)->Arg(8)->Arg(16)->Arg(24);

void BM_ScriptPTableParallel(benchmark::State& state) {
    const ParameterArray p = krawtchouk_array(static_cast<std::size_t>(state.range(0)), FieldSpec::rational());
    for (auto _ : state) benchmark::DoNotOptimize(script_p_table(p));
}
BENCHMARK(BM_ScriptPTableParallel)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
