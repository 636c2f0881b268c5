#include <benchmark/benchmark.h>

#include <map>

#include "gmap/gaussian_maps.hpp"
#include "gmap/kernels.hpp"

using namespace gmap;

namespace {

const FormBasis& basis_for_genus(int g) {
  static std::map<int, FormBasis> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    const auto d = enumerate_galois(g, 1).front().representative;
    it = cache.emplace(g, canonical_form_basis(branch_solve(d, default_branch_points(d.branch_count()), 150),
                                               kernels::Execution::serial))
             .first;
  }
  return it->second;
}

// Integer rows of the transposed multiplication matrix, the input of the
// nullspace computation.
kernels::IntegerRows product_rows(int g) {
  const auto products = kernels::pair_products_serial(basis_for_genus(g).series, false);
  kernels::IntegerRows rows;
  for (const auto& s : products) {
    mpz_class lcm = 1;
    for (const auto& c : s.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    kernels::IntegerRow row;
    for (const auto& c : s.coefficients()) row.push_back(c.numerator() * (lcm / c.denominator()));
    rows.push_back(std::move(row));
  }
  return rows;
}

void BM_PairProducts(benchmark::State& state, kernels::Execution ex) {
  const auto& basis = basis_for_genus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_products(basis.series, true, ex));
}

void BM_EliminateRank(benchmark::State& state, kernels::Execution ex) {
  const auto rows = product_rows(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto work = rows;
    benchmark::DoNotOptimize(kernels::eliminate_rank(work, ex));
  }
}

void BM_ReduceEchelon(benchmark::State& state, kernels::Execution ex) {
  const auto rows = product_rows(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto work = rows;
    benchmark::DoNotOptimize(kernels::reduce_echelon(work, ex));
  }
}

void BM_StableRank(benchmark::State& state, kernels::Execution ex) {
  const auto d = enumerate_galois(static_cast<int>(state.range(0)), 1).front().representative;
  const auto t = default_branch_points(d.branch_count());
  for (auto _ : state) benchmark::DoNotOptimize(stable_rank(d, t, PrecisionPolicy::fixed(150), ex));
}

} // namespace

BENCHMARK_CAPTURE(BM_PairProducts, serial, kernels::Execution::serial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairProducts, parallel, kernels::Execution::parallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EliminateRank, serial, kernels::Execution::serial)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EliminateRank, parallel, kernels::Execution::parallel)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ReduceEchelon, serial, kernels::Execution::serial)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ReduceEchelon, parallel, kernels::Execution::parallel)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StableRank, serial, kernels::Execution::serial)->DenseRange(9, 12, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StableRank, parallel, kernels::Execution::parallel)->DenseRange(9, 12, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
