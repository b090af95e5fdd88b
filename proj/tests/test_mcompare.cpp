#include <doctest.h>

#include <entsim/mcompare.hpp>
#include <entsim/measures.hpp>
#include <entsim/states.hpp>

#include <cmath>
#include <random>

using namespace entsim;

TEST_SUITE_BEGIN("mcompare");

TEST_CASE("deficits vanish at the maximally entangled point") {
    auto r = compare_qubit_pure(1.0 / std::sqrt(2.0));
    CHECK(r.q_neg == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.q_logneg == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.q_eof == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("comparison row agrees with the direct measures") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int k = 0; k < 20; ++k) {
        double c0 = u(rng);
        auto r = compare_qubit_pure(c0);
        SchmidtState s{{c0, std::sqrt(1.0 - c0 * c0)}, {2, 2}};
        CHECK(r.neg == doctest::Approx(pure_negativity(s)).epsilon(1e-12));
        CHECK(r.logneg == doctest::Approx(pure_log_negativity(s)).epsilon(1e-12));
        CHECK(r.eof == doctest::Approx(pure_eof(s)).epsilon(1e-12));
        CHECK(r.d_nl == doctest::Approx(r.q_neg - r.q_logneg).epsilon(1e-12));
    }
}

TEST_CASE("derivative formulas match finite differences") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    const double h = 1e-6;
    for (int k = 0; k < 25; ++k) {
        double c0 = u(rng);
        auto fd = [&](auto f) { return (f(c0 + h) - f(c0 - h)) / (2.0 * h); };
        CHECK(d_negativity_dc0(c0) ==
              doctest::Approx(fd([](double c) { return compare_qubit_pure(c).neg; }))
                  .epsilon(1e-5));
        CHECK(d_log_negativity_dc0(c0) ==
              doctest::Approx(fd([](double c) { return compare_qubit_pure(c).logneg; }))
                  .epsilon(1e-5));
        CHECK(d_eof_dc0(c0) ==
              doctest::Approx(fd([](double c) { return compare_qubit_pure(c).eof; }))
                  .epsilon(1e-5));
    }
}

TEST_CASE("local_maxima finds a known interior peak") {
    auto m = local_maxima([](double x) { return std::sin(3.141592653589793 * x); }, 0.0, 1.0);
    REQUIRE(m.size() == 1);
    CHECK(m[0].arg == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(m[0].value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("qutrit comparison at the symmetric point") {
    double c = 1.0 / std::sqrt(3.0);
    auto r = compare_qutrit_pure(c, c);
    CHECK(r.entropy == doctest::Approx(std::log2(3.0)));
    CHECK(r.neg == doctest::Approx(1.0));
    CHECK(r.conc == doctest::Approx(1.0));
    CHECK(r.q_entropy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.q_neg == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.q_conc == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("simplex maximizer recovers a known optimum") {
    // f = c0^2 c1^2 c2^2 peaks at the symmetric point
    auto m = max_over_qutrit_simplex([](double a, double b) {
        double c2sq = std::max(0.0, 1.0 - a * a - b * b);
        return a * a * b * b * c2sq;
    });
    CHECK(m.c0 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));
    CHECK(m.c1 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));
    CHECK(m.value == doctest::Approx(1.0 / 27.0).epsilon(1e-8));
}

TEST_CASE("tripartite measures") {
    CHECK(ghz_tangle(1.0 / std::sqrt(2.0)) == doctest::Approx(1.0));
    CHECK(ghz_tangle(0.0) == doctest::Approx(0.0));
    CHECK(ghz_g_measure(0.3) == doctest::Approx(ghz_tangle(0.3)));
    CHECK(w_tangle() == doctest::Approx(0.0));
    CHECK(w_g_measure() == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("distance equals the overlap closed form") {
    CHECK(distance_D(1.0 / std::sqrt(2.0)) == doctest::Approx(0.0).epsilon(1e-12));
    for (double c0 = 0.1; c0 < 0.95; c0 += 0.1)
        CHECK(distance_D(c0) == doctest::Approx(closeness_C(c0)).epsilon(1e-12));
}

TEST_CASE("distance bounds the fractional deviations") {
    for (double c0 = 0.02; c0 < 0.99; c0 += 0.01) {
        auto r = compare_qubit_pure(c0);
        double d = distance_D(c0);
        CHECK(d >= r.q_neg - 1e-9);
        CHECK(d >= r.q_logneg - 1e-9);
    }
}

TEST_CASE("CHSH maximum and deficit") {
    CHECK(bell_chsh_max(1.0 / std::sqrt(2.0)) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(bell_deficit(1.0 / std::sqrt(2.0)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bell_chsh_max(1e-9) == doctest::Approx(2.0));
    CHECK(bell_deficit(0.4) == doctest::Approx(0.4206).epsilon(1e-3));
}

TEST_SUITE_END();
