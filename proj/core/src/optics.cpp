#include "entsim/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entsim {

namespace {
constexpr double kC = 299792458.0;  // m/s
}

double bbo_n_ordinary(double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    return std::sqrt(2.7359 + 0.01878 / (l2 - 0.01822) - 0.01354 * l2);
}

double bbo_n_extraordinary(double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    return std::sqrt(2.3753 + 0.01224 / (l2 - 0.01667) - 0.01516 * l2);
}

double bbo_n_effective(double lambda_um, double theta_rad) {
    const double no = bbo_n_ordinary(lambda_um);
    const double ne = bbo_n_extraordinary(lambda_um);
    const double s = std::sin(theta_rad), c = std::cos(theta_rad);
    return no * ne / std::sqrt(ne * ne * c * c + no * no * s * s);
}

double bbo_phase_match_angle(double lambda_pump_um) {
    const double target = bbo_n_ordinary(2.0 * lambda_pump_um);
    double lo = 0.0, hi = std::numbers::pi / 2.0;
    // n_eff decreases monotonically from n_o to n_e over [0, pi/2]
    if (bbo_n_effective(lambda_pump_um, hi) > target)
        throw std::invalid_argument("no phase-matching angle at this wavelength");
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bbo_n_effective(lambda_pump_um, mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double coherence_time(double lambda_m, double dlambda_m) {
    return lambda_m * lambda_m / (kC * dlambda_m);
}

double coherence_length(double lambda_m, double dlambda_m) {
    return lambda_m * lambda_m / dlambda_m;
}

double coherence_envelope(double dt, double tau) {
    return std::exp(-std::abs(dt) / tau);
}

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("samples must have equal length >= 2");
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va == 0.0 || vb == 0.0) throw std::invalid_argument("zero-variance sample");
    return cov / std::sqrt(va * vb);
}

}  // namespace entsim
