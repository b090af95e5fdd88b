#include <doctest.h>

#include <entsim/states.hpp>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace entsim;

TEST_SUITE_BEGIN("states");

TEST_CASE("x_state layout and validation") {
    auto rho = x_state(0.2, {0.3, 0.1});
    rho.validate();
    CHECK(rho.mat(0, 0).real() == doctest::Approx(0.2));
    CHECK(rho.mat(3, 3).real() == doctest::Approx(0.8));
    CHECK(rho.mat(0, 3) == cplx{0.3, 0.1});
    CHECK(rho.mat(3, 0) == cplx{0.3, -0.1});
    CHECK_THROWS(x_state(0.2, {0.5, 0.0}));   // coherence above purity bound
}

TEST_CASE("general X states place the coherence as named") {
    auto r2 = general_x_state_rho2(0.4, 0.1, 0.2, 0.3, {0.25, 0.0});
    r2.validate();
    CHECK(r2.mat(3, 3).real() == doctest::Approx(0.4));   // both excited
    CHECK(r2.mat(0, 0).real() == doctest::Approx(0.3));   // both ground
    CHECK(r2.mat(0, 3).real() == doctest::Approx(0.25));
    auto r1 = general_x_state_rho1(0.3, 0.25, 0.25, 0.2, {0.2, 0.0});
    r1.validate();
    CHECK(r1.mat(2, 1).real() == doctest::Approx(0.2));
    CHECK_THROWS(general_x_state_rho1(0.4, 0.2, 0.2, 0.2, {0.25, 0.0}));
}

TEST_CASE("qutrit family states validate") {
    for (double x : {0.05, 0.15, 0.25, 0.33}) {
        qubit_qutrit_state_I(x).validate();
        two_qutrit_state(x).validate();
    }
    for (double x : {0.34, 0.4, 0.5}) qubit_qutrit_state_II(x).validate();
    CHECK(qubit_qutrit_state_II(0.5).mat(0, 5).real() == doctest::Approx(0.25));
}

TEST_CASE("schmidt decomposition of a known vector") {
    // (|00> + |11>)/sqrt(2) has equal coefficients
    std::vector<cplx> psi{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    auto s = schmidt_decompose(psi, 2, 2);
    s.validate();
    CHECK(s.coeffs[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.coeffs[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("schmidt decomposition round-trips random pure states") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) {
        auto pure = testutil::random_pure(rng, {2, 3});
        std::vector<cplx> psi(6);
        // extract the state vector from the rank-1 projector
        auto eig = hermitian_eig(pure.mat);
        for (int i = 0; i < 6; ++i) psi[i] = eig.vectors(i, 5);
        auto s = schmidt_decompose(psi, 2, 3);
        double sq = 0.0;
        for (double c : s.coeffs) sq += c * c;
        CHECK(sq == doctest::Approx(1.0));
        auto rec = schmidt_pure_density(s);
        // purity and spectrum of marginals must match
        CHECK(purity_of(rec.mat) == doctest::Approx(1.0));
        auto ma = hermitian_eigenvalues(partial_trace(pure.mat, 2, 3, Subsystem::B));
        auto mb = hermitian_eigenvalues(partial_trace(rec.mat, 2, 3, Subsystem::B));
        for (size_t i = 0; i < ma.size(); ++i) CHECK(ma[i] == doctest::Approx(mb[i]));
    }
}

TEST_CASE("stokes round trip for a single qubit") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 50; ++k) {
        auto rho = testutil::random_density(rng, {2});
        auto s = density_to_stokes(rho);
        auto back = stokes_to_density(s);
        CHECK((back.mat - rho.mat).max_abs() < 1e-13);
        CHECK(degree_of_polarization(s) <= 1.0 + 1e-12);
    }
    StokesVector h{1.0, 0.0, 0.0, 1.0};
    auto rho = stokes_to_density(h);
    CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0));
    CHECK(degree_of_polarization(h) == doctest::Approx(1.0));
}

TEST_CASE("two-qubit stokes tensor round trip") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        auto rho = testutil::random_density(rng, {2, 2});
        auto r = two_qubit_stokes(rho);
        CHECK(r.r[0][0] == doctest::Approx(1.0));
        auto back = density_from_two_qubit_stokes(r);
        CHECK((back.mat - rho.mat).max_abs() < 1e-13);
    }
}

TEST_CASE("pauli basis properties") {
    for (int i = 1; i <= 3; ++i) {
        auto s = pauli(i);
        CHECK(s.trace().real() == doctest::Approx(0.0));
        CHECK(((s * s) - ComplexMatrix::identity(2)).max_abs() < 1e-15);
    }
    CHECK(pauli(2)(0, 1) == cplx{0.0, 1.0});
}

TEST_CASE("validate rejects unnormalized and non-positive matrices") {
    DensityMatrix bad{{2, 2}, ComplexMatrix::identity(4)};
    CHECK_THROWS(bad.validate());   // trace 4
    ComplexMatrix m(4, 4);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    DensityMatrix neg{{2, 2}, m};
    CHECK_THROWS(neg.validate());
}

TEST_SUITE_END();
