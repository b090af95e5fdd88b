#include "entsim/mcompare.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entsim/measures.hpp"
#include "entsim/states.hpp"

namespace entsim {

QubitComparison compare_qubit_pure(double c0) {
    if (!(c0 > 0.0 && c0 < 1.0)) throw std::invalid_argument("c0 must lie in (0,1)");
    QubitComparison r{};
    r.c0 = c0;
    r.c1 = std::sqrt(1.0 - c0 * c0);
    r.neg = c0 * r.c1;
    r.logneg = std::log2(2.0 * r.neg + 1.0);
    r.eof = eof_from_concurrence(2.0 * c0 * r.c1);
    r.q_neg = 1.0 - 2.0 * r.neg;
    r.q_logneg = 1.0 - r.logneg;
    r.q_eof = 1.0 - r.eof;
    r.d_nl = r.q_neg - r.q_logneg;
    r.d_el = r.q_eof - r.q_logneg;
    r.d_ne = r.q_eof - r.q_neg;
    return r;
}

double d_negativity_dc0(double c0) {
    return (1.0 - 2.0 * c0 * c0) / std::sqrt(1.0 - c0 * c0);
}

double d_log_negativity_dc0(double c0) {
    const double c1 = std::sqrt(1.0 - c0 * c0);
    return 2.0 * (1.0 - 2.0 * c0 * c0) / (c1 * (2.0 * c0 * c1 + 1.0) * std::numbers::ln2);
}

double d_eof_dc0(double c0) {
    const double c0sq = c0 * c0;
    return 2.0 * c0 * std::log2((1.0 - c0sq) / c0sq);
}

static double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

std::vector<Extremum1> local_maxima(const std::function<double(double)>& f, double lo,
                                    double hi, int grid) {
    std::vector<Extremum1> out;
    double prev2 = f(lo + (hi - lo) / grid);
    double prev1 = f(lo + 2.0 * (hi - lo) / grid);
    for (int i = 3; i < grid; ++i) {
        const double x = lo + i * (hi - lo) / grid;
        const double cur = f(x);
        if (prev1 > prev2 && prev1 >= cur) {
            const double xm = golden_max(f, lo + (i - 3) * (hi - lo) / grid, x);
            out.push_back({xm, f(xm)});
        }
        prev2 = prev1;
        prev1 = cur;
    }
    return out;
}

QutritComparison compare_qutrit_pure(double c0, double c1) {
    const double rest = 1.0 - c0 * c0 - c1 * c1;
    if (c0 < 0.0 || c1 < 0.0 || rest < -1e-12)
        throw std::invalid_argument("coefficients outside the Schmidt simplex");
    QutritComparison r{};
    r.c0 = c0;
    r.c1 = c1;
    r.c2 = std::sqrt(std::max(rest, 0.0));
    SchmidtState s{{c0, c1, r.c2}, {3, 3}};
    r.entropy = pure_entanglement_entropy(s);
    r.neg = pure_negativity(s);
    r.iconc = pure_qutrit_i_concurrence_sq(s);
    r.conc = std::sqrt(r.iconc);
    const double emax = std::log2(3.0);
    r.q_entropy = (emax - r.entropy) / emax;
    r.q_neg = 1.0 - r.neg;
    r.q_conc = 1.0 - r.conc;
    r.d_ne = r.q_entropy - r.q_neg;
    r.d_ec = r.q_entropy - r.q_conc;
    r.d_nc = r.q_neg - r.q_conc;
    return r;
}

Extremum2 max_over_qutrit_simplex(const std::function<double(double, double)>& f, int grid) {
    Extremum2 best{0.0, 0.0, -1e300};
    for (int i = 0; i <= grid; ++i) {
        const double c0 = static_cast<double>(i) / grid;
        for (int j = 0; j <= grid; ++j) {
            const double c1 = static_cast<double>(j) / grid;
            if (c0 * c0 + c1 * c1 > 1.0 + 1e-12) break;
            const double v = f(std::min(c0, 1.0), std::min(c1, std::sqrt(1.0 - c0 * c0)));
            if (v > best.value) best = {c0, c1, v};
        }
    }
    // local refinement by shrinking pattern search
    double step = 1.0 / grid;
    while (step > 1e-9) {
        bool moved = false;
        const double cand[4][2] = {{best.c0 + step, best.c1}, {best.c0 - step, best.c1},
                                   {best.c0, best.c1 + step}, {best.c0, best.c1 - step}};
        for (const auto& c : cand) {
            const double a = c[0], b = c[1];
            if (a < 0.0 || b < 0.0 || a * a + b * b > 1.0) continue;
            const double v = f(a, b);
            if (v > best.value) {
                best = {a, b, v};
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

double ghz_tangle(double c0) {
    const double c1sq = 1.0 - c0 * c0;
    return 4.0 * c0 * c0 * c1sq;
}

double ghz_g_measure(double c0) { return ghz_tangle(c0); }

double w_tangle() { return 0.0; }

double w_g_measure() {
    const double c = 1.0 / 3.0;
    return (8.0 / 3.0) * 3.0 * c * c;
}

double geometric_distance(double c0) {
    const double c1 = std::sqrt(1.0 - c0 * c0);
    const double overlap = (c0 + c1) / std::numbers::sqrt2;
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap * overlap));
}

double closeness_C(double c0) { return geometric_distance(c0); }

double distance_D(double c0) {
    // Frobenius norm of the projector difference against the phase-aligned
    // (|00> + |11>)/sqrt(2) reference; agrees with closeness_C analytically.
    const double c1 = std::sqrt(1.0 - c0 * c0);
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexMatrix psi(4, 1), phi(4, 1);
    psi(0, 0) = c0;
    psi(3, 0) = c1;
    phi(0, 0) = r;
    phi(3, 0) = r;
    const ComplexMatrix diff = psi * psi.adjoint() - phi * phi.adjoint();
    return diff.frobenius_norm();
}

double bell_chsh_max(double c0) {
    const double conc = 2.0 * c0 * std::sqrt(1.0 - c0 * c0);
    return 2.0 * std::sqrt(1.0 + conc * conc);
}

double bell_deficit(double c0) {
    const double top = 2.0 * std::numbers::sqrt2 - 2.0;
    return (top - (bell_chsh_max(c0) - 2.0)) / top;
}

}  // namespace entsim
