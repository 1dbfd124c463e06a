#include "pvf/correlations.hpp"
#include "pvf/linalg.hpp"
#include "pvf/parallel.hpp"
#include "pvf/series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pvf;

namespace {

// n x (n + 4) matrix of rank n - 2 with small rational entries.
Matrix low_rank_matrix(long n)
{
    std::mt19937_64 gen(static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    const long cols = n + 4, rank = n - 2;
    Matrix a(n, std::vector<Rational>(rank)), b(rank, std::vector<Rational>(cols));
    for (auto& row : a)
        for (auto& x : row) x = frac(num(gen), den(gen));
    for (auto& row : b)
        for (auto& x : row) x = frac(num(gen), den(gen));
    Matrix m(n, std::vector<Rational>(cols, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < cols; ++j)
            for (long k = 0; k < rank; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

Series long_series(long terms)
{
    return correlation_diag({2, false, terms});
}

void BM_NullspaceParallel(benchmark::State& st)
{
    Matrix m = low_rank_matrix(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(rational_nullspace(m));
}

void BM_NullspaceSerial(benchmark::State& st)
{
    Matrix m = low_rank_matrix(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(rational_nullspace_reference(m));
}

void BM_ProductParallel(benchmark::State& st)
{
    Series a = long_series(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(series_product(a, a));
}

void BM_ProductSerial(benchmark::State& st)
{
    Series a = long_series(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(series_product_serial(a, a));
}

void BM_DeterminantParallel(benchmark::State& st)
{
    SeriesMatrix m = toeplitz_matrix({static_cast<int>(st.range(0)), false, 60}, 60);
    for (auto _ : st) benchmark::DoNotOptimize(series_determinant(m));
}

void BM_DeterminantSerial(benchmark::State& st)
{
    SeriesMatrix m = toeplitz_matrix({static_cast<int>(st.range(0)), false, 60}, 60);
    for (auto _ : st) benchmark::DoNotOptimize(series_determinant_serial(m));
}

}  // namespace

BENCHMARK(BM_NullspaceParallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullspaceSerial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductParallel)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductSerial)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantSerial)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv)
{
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("threads", std::to_string(max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
