#include <doctest.h>

#include <entsim/esd.hpp>
#include <entsim/measures.hpp>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace entsim;

TEST_SUITE_BEGIN("esd");

TEST_CASE("closed-form death point matches the numeric sweep") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> uu(0.05, 0.6);
    auto model = DampingModel::qubit_pair();
    for (int k = 0; k < 15; ++k) {
        double u = uu(rng);
        // keep v strictly inside the positivity bound and below x so the
        // death point is interior
        double vmax = std::min(std::sqrt(u * (1.0 - u)), 1.0 - u);
        double v = 0.3 * vmax + 0.5 * vmax * std::generate_canonical<double, 53>(rng) * 0.5;
        XStateEsd cf{u, v};
        auto rho = x_state(u, {v, 0.0});
        auto num = esd_point(rho, model);
        REQUIRE(num.has_value());
        CHECK(*num == doctest::Approx(cf.p_end()).epsilon(1e-6));
    }
}

TEST_CASE("restart thresholds follow the closed form") {
    XStateEsd cf{0.2, 0.4};
    auto rho = x_state(0.2, {0.4, 0.0});
    auto model = DampingModel::qubit_pair();
    for (double p_n : {0.1, 0.25, 0.4}) {
        auto d = esd_point_after(rho, model, p_n, {Luo::Identity, Luo::Identity});
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(cf.p0_stage2(p_n)).epsilon(1e-6));
    }
}

TEST_CASE("double NOT death matches its closed form") {
    XStateEsd cf{0.2, 0.4};
    auto rho = x_state(0.2, {0.4, 0.0});
    auto model = DampingModel::qubit_pair();
    // the closed forms give the death point in the cumulative parameter;
    // the numeric routine reports the restarted stage's own parameter
    auto to_stage2 = [](double total, double p_n) { return (total - p_n) / (1.0 - p_n); };
    LuoPair dn{Luo::SigmaX, Luo::SigmaX};
    for (double p_n : {0.2, 0.3, 0.45}) {
        auto d = esd_point_after(rho, model, p_n, dn);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(to_stage2(cf.p_end_after_double(p_n), p_n)).epsilon(1e-6));
    }
    LuoPair sn{Luo::SigmaX, Luo::Identity};
    for (double p_n : {0.2, 0.3, 0.45}) {
        auto d = esd_point_after(rho, model, p_n, sn);
        REQUIRE(d.has_value());
        CHECK(*d == doctest::Approx(to_stage2(cf.p_end_after_single(p_n), p_n)).epsilon(1e-6));
    }
}

TEST_CASE("regime classification respects the closed-form boundaries") {
    XStateEsd cf{0.2, 0.4};
    auto rho = x_state(0.2, {0.4, 0.0});
    auto model = DampingModel::qubit_pair();
    LuoPair dn{Luo::SigmaX, Luo::SigmaX};
    CHECK(classify_manipulation(rho, model, cf.pB_double() - 0.02, dn) == Regime::Avoid);
    CHECK(classify_manipulation(rho, model, 0.5 * (cf.pB_double() + cf.pA_double()), dn) ==
          Regime::Delay);
    CHECK(classify_manipulation(rho, model, cf.pA_double() + 0.02, dn) == Regime::Hasten);
}

TEST_CASE("general outer X death point matches its closed form") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0.05, 0.4);
    auto model = DampingModel::qubit_pair();
    for (int k = 0; k < 10; ++k) {
        double a = u(rng), b = 0.5 * u(rng), c = 0.5 * u(rng);
        double d = 1.0 - a - b - c;
        double z = 0.9 * std::sqrt(a * d);
        GeneralXOuterEsd cf{a, b, c, d, z};
        if (cf.p0() <= 0.0 || cf.p0() >= 1.0) continue;
        auto rho = general_x_state_rho2(a, b, c, d, {z, 0.0});
        auto num = esd_point(rho, model);
        REQUIRE(num.has_value());
        CHECK(*num == doctest::Approx(cf.p0()).epsilon(1e-6));
    }
}

TEST_CASE("general inner X death point matches its closed form") {
    auto model = DampingModel::qubit_pair();
    // needs z^2 > ad so the state starts entangled
    double a = 0.3, b = 0.3, c = 0.3, d = 0.1, z = 0.25;
    GeneralXInnerEsd cf{a, b, c, d, z};
    auto rho = general_x_state_rho1(a, b, c, d, {z, 0.0});
    auto num = esd_point(rho, model);
    REQUIRE(num.has_value());
    CHECK(*num == doctest::Approx(cf.p0()).epsilon(1e-6));
}

TEST_CASE("general X symmetric case reduces to the simple X forms") {
    // with b = c = 0 the outer family is the one-parameter X state
    double u = 0.3, v = 0.35;
    GeneralXOuterEsd g{1.0 - u, 0.0, 0.0, u, v};
    XStateEsd cf{u, v};
    CHECK(g.p0() == doctest::Approx(cf.p_end()).epsilon(1e-12));
    CHECK(g.pA_double() == doctest::Approx(cf.pA_double()).epsilon(1e-12));
    CHECK(g.pB_double() == doctest::Approx(cf.pB_double()).epsilon(1e-12));
    CHECK(g.pB_single() == doctest::Approx(cf.pB_single()).epsilon(1e-12));
    CHECK(g.pA_single() == doctest::Approx(cf.pA_single()).epsilon(1e-12));
}

TEST_CASE("qubit-qutrit closed-form eigenvalue tracks the numeric one") {
    auto model = DampingModel::qubit_qutrit(0.8, 0.6);
    auto rho = qubit_qutrit_state_I(0.25);
    for (double p : {0.0, 0.2, 0.45, 0.7}) {
        auto ev = evolve(rho, model, p);
        CHECK(min_pt_eigenvalue(ev) ==
              doctest::Approx(qubit_qutrit_min_pt_closed(0.25, p)).epsilon(1e-9));
    }
    CHECK(qubit_qutrit_min_pt_closed(0.25, 0.0) == doctest::Approx(-0.125));
}

TEST_CASE("damped states stay physical along the whole sweep") {
    auto model = DampingModel::qutrit_pair(0.75, 1.0);
    auto rho = two_qutrit_state(0.25);
    for (double p : {0.0, 0.3, 0.6, 0.9, 1.0}) evolve(rho, model, p).validate();
}

TEST_CASE("asymptotic decay reports no death point") {
    // a Bell state under one-sided damping loses entanglement only at p=1
    SchmidtState s{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {2, 2}};
    auto rho = schmidt_pure_density(s);
    auto model = DampingModel::qubit_pair();
    CHECK_FALSE(esd_point(rho, model).has_value());
}

TEST_SUITE_END();
