#include "entsim/esd.hpp"

#include <cmath>
#include <stdexcept>

#include "entsim/measures.hpp"

namespace entsim {

double XStateEsd::p_end_after_double(double p_n) const {
    const double xx = x();
    const double num = p_n * p_n * (2.0 * xx + v) + p_n * (1.0 - 2.0 * xx - 2.0 * v) + v;
    const double den = xx * (p_n * p_n - 1.0) + 1.0;
    return num / den;
}

double XStateEsd::p_end_after_single(double p_n) const {
    const double xx = x();
    const double rad = 4.0 * xx * (p_n - 1.0) * p_n + 4.0 * (p_n - 1.0) * (p_n - 1.0) * v * v + 1.0;
    return (std::sqrt(rad) + 2.0 * xx * p_n - 1.0) / (2.0 * xx * p_n);
}

double GeneralXOuterEsd::p0() const {
    const double disc = (b - c) * (b - c) + 4.0 * z * z;
    return (-b - c + std::sqrt(disc)) / (2.0 * a);
}

double GeneralXOuterEsd::pB_double() const {
    const double disc = (b - c) * (b - c) + 4.0 * z * z;
    const double den = 2.0 * ((a + b) * (a + c) - z * z);
    return 1.0 - (2.0 * a + b + c - std::sqrt(disc)) / den;
}

double GeneralXOuterEsd::pA_single() const {
    const double disc = (b - c) * (b - c) + 4.0 * z * z;
    const double q = 1.0 - p0();
    const double num = (c + a) * ((c + a) * q - 1.0);
    const double den = (a + b) * ((a + b) - std::sqrt(disc)) - a;
    return 1.0 - num / den;
}

double GeneralXInnerEsd::p0() const {
    const double disc = (b + c + 2.0 * a) * (b + c + 2.0 * a) - 4.0 * (a - z * z);
    return (-b - c + std::sqrt(disc)) / (2.0 * a);
}

double GeneralXInnerEsd::pB_double() const {
    const double disc = (b + c + 2.0 * a) * (b + c + 2.0 * a) - 4.0 * (a - z * z);
    const double w = a - z * z;
    return (2.0 * w - (2.0 * a + b + c) + std::sqrt(disc)) / (2.0 * w);
}

double GeneralXInnerEsd::pA_single() const {
    const double q = 1.0 - p0();
    const double num = (c + a) * (2.0 * a * q - (c + a) * q + c + d) - a;
    const double den = (c + a) * (2.0 * a * q - (b + a)) - a;
    return num / den;
}

DampingModel DampingModel::qubit_pair() { return {{2, 2}, {{1.0}, {1.0}}}; }

DampingModel DampingModel::qubit_qutrit(double r1, double r2) {
    return {{2, 3}, {{1.0}, {r1, r2}}};
}

DampingModel DampingModel::qutrit_pair(double r1, double r2) {
    return {{3, 3}, {{r1, r2}, {r1, r2}}};
}

static KrausChannel subsystem_channel(int dim, const std::vector<double>& levels) {
    if (dim == 2) return adc_qubit(levels[0]);
    return adc_qutrit(levels[0], levels[1]);
}

KrausChannel DampingModel::channel_to(double p) const {
    KrausChannel left, right;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        std::vector<double> lv;
        for (double r : ratios[s]) lv.push_back(r * p);
        (s == 0 ? left : right) = subsystem_channel(dims[s], lv);
    }
    return pair_channel(left, right);
}

KrausChannel DampingModel::channel_between(double p_n, double p) const {
    KrausChannel left, right;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        std::vector<double> lv;
        for (double r : ratios[s]) {
            const double q = (r * p - r * p_n) / (1.0 - r * p_n);
            lv.push_back(std::clamp(q, 0.0, 1.0));
        }
        (s == 0 ? left : right) = subsystem_channel(dims[s], lv);
    }
    return pair_channel(left, right);
}

DensityMatrix evolve(const DensityMatrix& rho0, const DampingModel& model, double p) {
    return apply(rho0, model.channel_to(p));
}

DensityMatrix evolve_interrupted(const DensityMatrix& rho0, const DampingModel& model,
                                 double p_n, const LuoPair& luo, double p_prime) {
    DensityMatrix rho = evolve(rho0, model, p_n);
    rho = apply_local(rho, local_unitary(luo.u1, model.dims[0]),
                      local_unitary(luo.u2, model.dims[1]));
    return apply(rho, model.channel_to(p_prime));
}

std::optional<double> find_esd_point(const std::function<double(double)>& min_pt_of_p,
                                     double p_lo, int grid, double tol) {
    // An entangled state stays dead once the partial transpose turns
    // positive under this damping family, so one sign change suffices.
    const double eps = 1e-12;
    double prev_p = p_lo;
    double prev_v = min_pt_of_p(p_lo);
    if (prev_v >= -eps) return p_lo;
    double lo = -1.0, hi = -1.0;
    for (int i = 1; i <= grid; ++i) {
        const double p = p_lo + (1.0 - p_lo) * static_cast<double>(i) / grid;
        const double val = min_pt_of_p(p);
        if (prev_v < -eps && val >= -eps) {
            lo = prev_p;
            hi = p;
            break;
        }
        prev_p = p;
        prev_v = val;
    }
    if (lo < 0.0) return std::nullopt;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (min_pt_of_p(mid) < -eps ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    // everything disentangles in the p -> 1 limit; only a strictly earlier
    // crossing counts as sudden death
    if (root >= 1.0 - 1e-4) return std::nullopt;
    return root;
}

std::optional<double> esd_point(const DensityMatrix& rho0, const DampingModel& model) {
    return find_esd_point(
        [&](double p) { return min_pt_eigenvalue(evolve(rho0, model, p)); });
}

std::optional<double> esd_point_after(const DensityMatrix& rho0, const DampingModel& model,
                                      double p_n, const LuoPair& luo) {
    return find_esd_point([&](double pp) {
        return min_pt_eigenvalue(evolve_interrupted(rho0, model, p_n, luo, pp));
    });
}

Regime classify_manipulation(const DensityMatrix& rho0, const DampingModel& model,
                             double p_n, const LuoPair& luo, double tol) {
    const auto base = esd_point_after(rho0, model, p_n, {Luo::Identity, Luo::Identity});
    const auto manip = esd_point_after(rho0, model, p_n, luo);
    if (!manip) return Regime::Avoid;
    if (!base) return Regime::Hasten;  // death created where there was none
    if (*manip > *base + tol) return Regime::Delay;
    if (*manip < *base - tol) return Regime::Hasten;
    return Regime::Neutral;
}

ManipBoundaries manipulation_boundaries(const DensityMatrix& rho0, const DampingModel& model,
                                        const LuoPair& luo, int grid) {
    ManipBoundaries out;
    out.unmanipulated_esd = esd_point(rho0, model);
    const double p_max = out.unmanipulated_esd ? *out.unmanipulated_esd : 1.0;

    // positive: delayed; empty: avoided
    auto death_shift = [&](double p_n) -> std::optional<double> {
        const auto m = esd_point_after(rho0, model, p_n, luo);
        if (!m) return std::nullopt;
        const auto b = esd_point_after(rho0, model, p_n, {Luo::Identity, Luo::Identity});
        return *m - (b ? *b : 1.0);
    };

    auto kind = [&](double p_n) {
        const auto s = death_shift(p_n);
        if (!s) return Regime::Avoid;
        if (*s > 1e-7) return Regime::Delay;
        if (*s < -1e-7) return Regime::Hasten;
        return Regime::Neutral;
    };

    std::vector<double> pts;
    std::vector<Regime> kinds;
    for (int i = 1; i < grid; ++i) {
        const double p_n = p_max * static_cast<double>(i) / grid;
        pts.push_back(p_n);
        kinds.push_back(kind(p_n));
    }
    for (Regime r : kinds) {
        if (r == Regime::Avoid) out.any_avoid = true;
        if (r == Regime::Delay) out.any_delay = true;
        if (r == Regime::Hasten) out.any_hasten = true;
    }

    auto bisect = [&](double lo, double hi, auto pred) {
        for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
            const double mid = 0.5 * (lo + hi);
            (pred(mid) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    // avoidance occupies an initial interval of p_n when present
    if (out.any_avoid) {
        std::size_t i = 0;
        while (i < kinds.size() && kinds[i] == Regime::Avoid) ++i;
        if (i == kinds.size()) {
            out.avoid_below = p_max;
        } else {
            const double lo = i == 0 ? 0.0 : pts[i - 1];
            out.avoid_below = bisect(lo, pts[i],
                                     [&](double p) { return kind(p) == Regime::Avoid; });
        }
    }
    // hastening occupies a final interval; its lower edge is where the
    // shifted death point crosses the unmanipulated one
    if (out.any_hasten) {
        std::size_t j = 0;
        while (j < kinds.size() && kinds[j] != Regime::Hasten) ++j;
        if (j == 0) {
            out.delay_below = 0.0;
        } else {
            out.delay_below = bisect(pts[j - 1], pts[j], [&](double p) {
                const auto s = death_shift(p);
                return !s || *s > 0.0;
            });
        }
    } else if (out.any_avoid || out.any_delay) {
        out.delay_below = p_max;
    }
    return out;
}

double qubit_qutrit_min_pt_closed(double x, double p) {
    const double p2 = p * p, p3 = p2 * p, p4 = p2 * p2, x2 = x * x;
    const double rad = 0.64 * p4 * x2 - 1.28 * p3 * x2 + 10.24 * p2 * x2 + 2.56 * p3 * x -
                       12.16 * p2 * x + 4.96 * p2 - 25.6 * p * x2 + 25.6 * p * x - 6.4 * p +
                       16.0 * x2 - 16.0 * x + 4.0;
    return 0.25 * (2.0 * p2 * x - 4.0 * p * x + 1.6 * p + 2.0 * x - std::sqrt(rad));
}

}  // namespace entsim
