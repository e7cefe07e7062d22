// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "liecoh/exactlin/linalg.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "liecoh/report/class_tables.hpp"

using namespace liecoh;

namespace {

Matrix dense(std::size_t rows, std::size_t cols) {
  std::uint64_t s = 12345;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m(i, j) = Scalar(static_cast<long>(s >> 59) - 16, static_cast<long>((s >> 40) % 7) + 1);
    }
  return m;
}

void BM_rref(benchmark::State& st) {
  const Matrix m = dense(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
void BM_rref_reference(benchmark::State& st) {
  const Matrix m = dense(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rref_reference(m));
}
void BM_det(benchmark::State& st) {
  const Matrix m = dense(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(det(m));
}
void BM_det_reference(benchmark::State& st) {
  const Matrix m = dense(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(det_reference(m));
}
void BM_jacobi_check(benchmark::State& st) {
  const LieAlgebra g = catalog("mu0", {{"n", st.range(0)}});
  for (auto _ : st) benchmark::DoNotOptimize(jacobi_check(g));
}
void BM_report(benchmark::State& st) {
  ReportOptions o;
  o.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(class_tables(o));
}

}  // namespace

BENCHMARK(BM_rref)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_reference)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det_reference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jacobi_check)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_report)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
