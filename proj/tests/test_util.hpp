#pragma once

#include <complex>
#include <random>
#include <vector>

#include <entsim/states.hpp>

namespace testutil {

inline entsim::ComplexMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    entsim::ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

// Full-rank random mixed state via the Ginibre construction G G^dag / Tr.
inline entsim::DensityMatrix random_density(std::mt19937_64& rng, std::vector<int> dims) {
    int n = 1;
    for (int d : dims) n *= d;
    auto g = random_complex(rng, n, n);
    auto m = g * g.adjoint();
    auto t = m.trace();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) /= t;
    entsim::DensityMatrix rho{std::move(dims), std::move(m)};
    return rho;
}

inline entsim::DensityMatrix random_pure(std::mt19937_64& rng, std::vector<int> dims) {
    int n = 1;
    for (int d : dims) n *= d;
    auto psi = random_complex(rng, n, 1);
    double norm = psi.frobenius_norm();
    for (int i = 0; i < n; ++i) psi(i, 0) /= norm;
    entsim::DensityMatrix rho{std::move(dims), psi * psi.adjoint()};
    return rho;
}

// Convex mixture of random product states: separable by construction.
inline entsim::DensityMatrix random_separable(std::mt19937_64& rng, std::vector<int> dims,
                                              int terms = 6) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    int n = 1;
    for (int d : dims) n *= d;
    entsim::ComplexMatrix acc(n, n);
    double wsum = 0.0;
    for (int t = 0; t < terms; ++t) {
        auto a = random_pure(rng, {dims[0]});
        auto b = random_pure(rng, {dims[1]});
        double w = u(rng);
        wsum += w;
        acc = acc + entsim::tensor_product(a.mat, b.mat) * entsim::cplx{w, 0.0};
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc(i, j) /= wsum;
    return entsim::DensityMatrix{std::move(dims), std::move(acc)};
}

}  // namespace testutil
