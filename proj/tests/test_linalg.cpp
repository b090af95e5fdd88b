#include <doctest.h>

#include <entsim/linalg.hpp>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace entsim;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("identity and basic arithmetic") {
    auto i3 = ComplexMatrix::identity(3);
    CHECK(i3.trace() == cplx{3.0, 0.0});
    auto m = i3 * cplx{2.0, 0.0} - i3;
    CHECK(m(0, 0) == cplx{1.0, 0.0});
    CHECK(m(0, 1) == cplx{0.0, 0.0});
    CHECK((m * m).trace().real() == doctest::Approx(3.0));
}

TEST_CASE("adjoint conjugates and transposes") {
    ComplexMatrix m(2, 3);
    m(0, 1) = {1.0, 2.0};
    auto a = m.adjoint();
    CHECK(a.rows() == 3);
    CHECK(a(1, 0) == cplx{1.0, -2.0});
    CHECK(m.transpose()(1, 0) == cplx{1.0, 2.0});
    CHECK(m.conjugate()(0, 1) == cplx{1.0, -2.0});
}

TEST_CASE("tensor product dimensions and entries") {
    ComplexMatrix a(2, 2), b(3, 3);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    b(2, 1) = {0.0, 1.0};
    auto t = tensor_product(a, b);
    REQUIRE(t.rows() == 6);
    CHECK(t(2, 1) == cplx{0.0, 2.0});
    CHECK(t(5, 4) == cplx{0.0, 3.0});
}

TEST_CASE("partial transpose is an involution on random matrices") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        auto rho = testutil::random_density(rng, {2, 3});
        auto pt = partial_transpose(rho.mat, 2, 3, Subsystem::B);
        auto back = partial_transpose(pt, 2, 3, Subsystem::B);
        CHECK((back - rho.mat).max_abs() < 1e-14);
        // transposing both subsystems equals the full transpose
        auto both = partial_transpose(partial_transpose(rho.mat, 2, 3, Subsystem::A), 2, 3,
                                      Subsystem::B);
        CHECK((both - rho.mat.transpose()).max_abs() < 1e-14);
    }
}

TEST_CASE("partial trace marginals are consistent") {
    std::mt19937_64 rng(12);
    auto rho = testutil::random_density(rng, {3, 3});
    auto ra = partial_trace(rho.mat, 3, 3, Subsystem::B);
    auto rb = partial_trace(rho.mat, 3, 3, Subsystem::A);
    CHECK(ra.trace().real() == doctest::Approx(1.0));
    CHECK(rb.trace().real() == doctest::Approx(1.0));
    // tracing a product state recovers its factors
    auto a = testutil::random_density(rng, {2});
    auto b = testutil::random_density(rng, {3});
    auto prod = tensor_product(a.mat, b.mat);
    CHECK((partial_trace(prod, 2, 3, Subsystem::B) - a.mat).max_abs() < 1e-13);
    CHECK((partial_trace(prod, 2, 3, Subsystem::A) - b.mat).max_abs() < 1e-13);
}

TEST_CASE("realign round-trips") {
    std::mt19937_64 rng(13);
    auto rho = testutil::random_density(rng, {2, 3});
    auto t = realign(rho.mat, 2, 3);
    CHECK(t.rows() == 4);
    CHECK(t.cols() == 9);
    auto back = realign_inverse(t, 2, 3);
    CHECK((back - rho.mat).max_abs() < 1e-14);
}

TEST_CASE("hermitian_eig reconstructs the input") {
    std::mt19937_64 rng(14);
    for (int n : {2, 4, 6, 9}) {
        auto g = testutil::random_complex(rng, n, n);
        auto h = g + g.adjoint();
        auto eig = hermitian_eig(h);
        REQUIRE(static_cast<int>(eig.values.size()) == n);
        for (int i = 0; i + 1 < n; ++i) CHECK(eig.values[i] <= eig.values[i + 1]);
        ComplexMatrix d(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = eig.values[i];
        auto rec = eig.vectors * d * eig.vectors.adjoint();
        CHECK((rec - h).max_abs() < 1e-8 * std::max(1.0, h.max_abs()));
        auto ortho = eig.vectors.adjoint() * eig.vectors - ComplexMatrix::identity(n);
        CHECK(ortho.max_abs() < 1e-12);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS(hermitian_eig(m));
}

TEST_CASE("singular values and trace norm") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 3.0;
    m(1, 1) = {0.0, -4.0};
    auto sv = singular_values(m);
    CHECK(sv[0] == doctest::Approx(4.0));   // descending
    CHECK(sv[1] == doctest::Approx(3.0));
    CHECK(trace_norm(m) == doctest::Approx(7.0));
}

TEST_CASE("hermitian_sqrt squares back") {
    std::mt19937_64 rng(15);
    auto rho = testutil::random_density(rng, {2, 2});
    auto s = hermitian_sqrt(rho.mat);
    CHECK((s * s - rho.mat).max_abs() < 1e-12);
}

TEST_SUITE_END();
