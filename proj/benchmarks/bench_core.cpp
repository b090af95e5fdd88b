#include <benchmark/benchmark.h>

#include <entsim/channels.hpp>
#include <entsim/esd.hpp>
#include <entsim/measures.hpp>
#include <entsim/states.hpp>
#include <entsim/tomography.hpp>

#include <random>

using namespace entsim;

namespace {

DensityMatrix random_density(std::mt19937_64& rng, std::vector<int> dims) {
    std::normal_distribution<double> g(0.0, 1.0);
    int n = 1;
    for (int d : dims) n *= d;
    ComplexMatrix gin(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gin(i, j) = {g(rng), g(rng)};
    auto m = gin * gin.adjoint();
    auto t = m.trace();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) /= t;
    return DensityMatrix{std::move(dims), std::move(m)};
}

void BM_HermitianEig(benchmark::State& state) {
    std::mt19937_64 rng(1);
    int n = static_cast<int>(state.range(0));
    std::vector<int> dims = n == 4 ? std::vector<int>{2, 2}
                          : n == 6 ? std::vector<int>{2, 3}
                                   : std::vector<int>{3, 3};
    auto rho = random_density(rng, dims);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho.mat));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(6)->Arg(9);

void BM_ChannelApply(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto rho = random_density(rng, {3, 3});
    auto ch = pair_channel(adc_qutrit(0.2, 0.1), adc_qutrit(0.3, 0.2));
    for (auto _ : state) benchmark::DoNotOptimize(apply(rho, ch));
}
BENCHMARK(BM_ChannelApply);

void BM_Negativity(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto rho = random_density(rng, {2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_EsdPoint(benchmark::State& state) {
    auto rho = x_state(0.2, {0.4, 0.0});
    auto model = DampingModel::qubit_pair();
    for (auto _ : state) benchmark::DoNotOptimize(esd_point(rho, model));
}
BENCHMARK(BM_EsdPoint);

void BM_MleReconstruct(benchmark::State& state) {
    SchmidtState s{{0.6, 0.8}, {2, 2}};
    auto rho = schmidt_pure_density(s);
    auto recs = simulate_counts(rho, 1e4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(mle_reconstruct(recs));
}
BENCHMARK(BM_MleReconstruct);

}  // namespace

BENCHMARK_MAIN();
