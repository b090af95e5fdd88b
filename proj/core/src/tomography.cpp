#include "entsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "entsim/linalg.hpp"

namespace entsim {

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
const cplx kI{0.0, 1.0};
}  // namespace

ComplexMatrix qwp_jones(double angle_deg) {
    const double a = 2.0 * angle_deg * kDeg;
    const double inv = 1.0 / std::numbers::sqrt2;
    ComplexMatrix m(2, 2);
    m(0, 0) = inv * (kI - std::cos(a));
    m(0, 1) = inv * (-std::sin(a));
    m(1, 0) = inv * (-std::sin(a));
    m(1, 1) = inv * (kI + std::cos(a));
    return m;
}

ComplexMatrix hwp_jones(double angle_deg) {
    const double a = 2.0 * angle_deg * kDeg;
    ComplexMatrix m(2, 2);
    m(0, 0) = std::cos(a);
    m(0, 1) = std::sin(a);
    m(1, 0) = std::sin(a);
    m(1, 1) = -std::cos(a);
    return m;
}

ComplexMatrix analyzer_state(const PlateSetting& s) {
    // <phi| = <H| HWP QWP, so |phi> = QWP^dag HWP^dag |H>
    const ComplexMatrix q = qwp_jones(s.qwp_deg);
    const ComplexMatrix h = hwp_jones(s.hwp_deg);
    ComplexMatrix e(2, 1);
    e(0, 0) = 1.0;
    ComplexMatrix v = q.adjoint() * (h.adjoint() * e);
    const double n = v.frobenius_norm();
    for (int i = 0; i < 2; ++i) v(i, 0) /= n;
    return v;
}

std::array<PlateSetting, 6> canonical_settings() {
    return {{{0.0, 0.0},      // H
             {0.0, 45.0},     // V
             {45.0, 22.5},    // D
             {45.0, 67.5},    // A
             {45.0, 0.0},     // R
             {0.0, 22.5}}};   // L
}

std::array<std::array<int, 2>, 3> stokes_axes() { return {{{2, 3}, {4, 5}, {0, 1}}}; }

static ComplexMatrix setting_projector(const PlateSetting& s) {
    const ComplexMatrix v = analyzer_state(s);
    ComplexMatrix p(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p(i, j) = v(i, 0) * std::conj(v(j, 0));
    return p;
}

static double probability(const DensityMatrix& rho, const ComplexMatrix& proj) {
    return std::max(0.0, (proj * rho.mat).trace().real());
}

std::vector<TomoRecord> simulate_counts(const DensityMatrix& rho, double counts_per_setting,
                                        std::optional<std::uint64_t> seed, double duration_s) {
    const auto cs = canonical_settings();
    std::vector<TomoRecord> out;
    std::mt19937_64 rng(seed ? *seed : 0);
    auto draw = [&](double mean) {
        if (!seed) return mean;
        std::poisson_distribution<long long> d(mean);
        return static_cast<double>(d(rng));
    };
    if (rho.dims.size() == 1 || rho.dim() == 2) {
        for (const auto& s : cs) {
            const double pr = probability(rho, setting_projector(s));
            out.push_back({s.qwp_deg, s.hwp_deg, 0.0, 0.0, draw(counts_per_setting * pr),
                           duration_s});
        }
        return out;
    }
    if (rho.dim() != 4) throw std::invalid_argument("tomography supports 1 or 2 qubits");
    for (const auto& s1 : cs) {
        const ComplexMatrix p1 = setting_projector(s1);
        for (const auto& s2 : cs) {
            const ComplexMatrix joint = tensor_product(p1, setting_projector(s2));
            const double pr = probability(rho, joint);
            out.push_back({s1.qwp_deg, s1.hwp_deg, s2.qwp_deg, s2.hwp_deg,
                           draw(counts_per_setting * pr), duration_s});
        }
    }
    return out;
}

static int canonical_index(double qwp, double hwp) {
    const auto cs = canonical_settings();
    for (int i = 0; i < 6; ++i)
        if (std::abs(cs[i].qwp_deg - qwp) < 1e-9 && std::abs(cs[i].hwp_deg - hwp) < 1e-9)
            return i;
    throw std::invalid_argument("record setting is not one of the canonical six");
}

StokesVector stokes_from_counts(const std::vector<TomoRecord>& records) {
    if (records.size() != 6) throw std::invalid_argument("expected six records");
    std::array<double, 6> c{};
    for (const auto& r : records) c[canonical_index(r.arm1_qwp, r.arm1_hwp)] = r.counts;
    double total = 0.0;
    for (double v : c) total += v;
    const double norm = total / 3.0;
    const auto ax = stokes_axes();
    StokesVector s;
    s.s1 = (c[ax[0][0]] - c[ax[0][1]]) / norm;
    s.s2 = (c[ax[1][0]] - c[ax[1][1]]) / norm;
    s.s3 = (c[ax[2][0]] - c[ax[2][1]]) / norm;
    return s;
}

DensityMatrix linear_inversion(const std::vector<TomoRecord>& records) {
    if (records.size() == 6) return stokes_to_density(stokes_from_counts(records));
    if (records.size() != 36) throw std::invalid_argument("expected 6 or 36 records");
    double grid[6][6] = {};
    double total = 0.0;
    for (const auto& r : records) {
        const int i = canonical_index(r.arm1_qwp, r.arm1_hwp);
        const int j = canonical_index(r.arm2_qwp, r.arm2_hwp);
        grid[i][j] = r.counts;
        total += r.counts;
    }
    const double norm = total / 9.0;
    const auto ax = stokes_axes();
    TwoQubitStokes st{};
    st.r[0][0] = 1.0;
    for (int k = 0; k < 3; ++k) {
        const int kp = ax[k][0], km = ax[k][1];
        // marginals taken against the H/V pair on the other arm
        st.r[k + 1][0] = (grid[kp][0] + grid[kp][1] - grid[km][0] - grid[km][1]) / norm;
        st.r[0][k + 1] = (grid[0][kp] + grid[1][kp] - grid[0][km] - grid[1][km]) / norm;
        for (int l = 0; l < 3; ++l) {
            const int lp = ax[l][0], lm = ax[l][1];
            st.r[k + 1][l + 1] =
                (grid[kp][lp] - grid[kp][lm] - grid[km][lp] + grid[km][lm]) / norm;
        }
    }
    return density_from_two_qubit_stokes(st);
}

// --- likelihood fit -------------------------------------------------------

static ComplexMatrix clamp_to_physical(const ComplexMatrix& m, double floor_ev) {
    const EigResult eig = hermitian_eig(m);
    const int d = static_cast<int>(m.rows());
    ComplexMatrix out(d, d);
    double tr = 0.0;
    std::vector<double> ev = eig.values;
    for (double& e : ev) {
        e = std::max(e, floor_ev);
        tr += e;
    }
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                out(i, j) += ev[k] / tr * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    return out;
}

// Lower-triangular T with A = T^dag T: Cholesky taken from the bottom-right
// corner (reverse both index orders, factor, reverse back).
static ComplexMatrix reverse_cholesky(const ComplexMatrix& a) {
    const int d = static_cast<int>(a.rows());
    ComplexMatrix b(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b(i, j) = a(d - 1 - i, d - 1 - j);
    ComplexMatrix l(d, d);
    for (int j = 0; j < d; ++j) {
        cplx diag = b(j, j);
        for (int k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
        const double dj = std::sqrt(std::max(diag.real(), 1e-12));
        l(j, j) = dj;
        for (int i = j + 1; i < d; ++i) {
            cplx v = b(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
            l(i, j) = v / dj;
        }
    }
    // b = l l^dag, so a = (P l^dag P)^dag (P l^dag P) with P the reversal
    ComplexMatrix t(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t(i, j) = std::conj(l(d - 1 - j, d - 1 - i));
    return t;
}

static int param_count(int d) { return d * d; }

static ComplexMatrix t_from_params(const std::vector<double>& x, int d) {
    ComplexMatrix t(d, d);
    int k = 0;
    for (int i = 0; i < d; ++i) t(i, i) = x[k++];
    for (int i = 1; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            t(i, j) = cplx(x[k], x[k + 1]);
            k += 2;
        }
    return t;
}

static std::vector<double> params_from_t(const ComplexMatrix& t) {
    const int d = static_cast<int>(t.rows());
    std::vector<double> x;
    for (int i = 0; i < d; ++i) x.push_back(t(i, i).real());
    for (int i = 1; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            x.push_back(t(i, j).real());
            x.push_back(t(i, j).imag());
        }
    return x;
}

static ComplexMatrix rho_from_params(const std::vector<double>& x, int d) {
    const ComplexMatrix t = t_from_params(x, d);
    ComplexMatrix r = t.adjoint() * t;
    const double tr = r.trace().real();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) /= std::max(tr, 1e-300);
    return r;
}

struct NmResult {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
    bool converged = false;
};

static NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                            std::vector<double> x0, int max_iter, double tol) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += 0.05 + 0.1 * std::abs(x0[i]);
    std::vector<double> fv(n + 1);
    for (int i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    NmResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::vector<int> ord(n + 1);
        for (int i = 0; i <= n; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        const int best = ord[0], worst = ord[n], second = ord[n - 1];
        if (std::abs(fv[worst] - fv[best]) <= tol * (1.0 + std::abs(fv[best]))) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i)
            if (i != worst)
                for (int k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;
        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (int k = 0; k < n; ++k)
                p[k] = centroid[k] + coef * (pts[worst][k] - centroid[k]);
            return p;
        };
        const std::vector<double> refl = blend(-1.0);
        const double fr = f(refl);
        if (fr < fv[best]) {
            const std::vector<double> exp_ = blend(-2.0);
            const double fe = f(exp_);
            pts[worst] = fe < fr ? exp_ : refl;
            fv[worst] = std::min(fe, fr);
        } else if (fr < fv[second]) {
            pts[worst] = refl;
            fv[worst] = fr;
        } else {
            const std::vector<double> con = blend(fr < fv[worst] ? -0.5 : 0.5);
            const double fc = f(con);
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = con;
                fv[worst] = fc;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (int k = 0; k < n; ++k)
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    int bi = 0;
    for (int i = 1; i <= static_cast<int>(x0.size()); ++i)
        if (fv[i] < fv[bi]) bi = i;
    res.x = pts[bi];
    res.f = fv[bi];
    res.iterations = iter;
    return res;
}

MleResult mle_reconstruct(const std::vector<TomoRecord>& records, const MleOptions& opt) {
    const bool pair = records.size() == 36;
    if (!pair && records.size() != 6) throw std::invalid_argument("expected 6 or 36 records");
    const int d = pair ? 4 : 2;

    const auto cs = canonical_settings();
    std::array<ComplexMatrix, 6> single;
    for (int i = 0; i < 6; ++i) single[i] = setting_projector(cs[i]);

    std::vector<ComplexMatrix> projs;
    std::vector<double> counts;
    double total = 0.0;
    for (const auto& r : records) {
        const int i = canonical_index(r.arm1_qwp, r.arm1_hwp);
        if (pair) {
            const int j = canonical_index(r.arm2_qwp, r.arm2_hwp);
            projs.push_back(tensor_product(single[i], single[j]));
        } else {
            projs.push_back(single[i]);
        }
        counts.push_back(r.counts);
        total += r.counts;
    }
    const double norm = total / (pair ? 9.0 : 3.0);

    const DensityMatrix seed_rho = linear_inversion(records);
    const ComplexMatrix phys = clamp_to_physical(seed_rho.mat, 1e-6);
    std::vector<double> x0 = params_from_t(reverse_cholesky(phys));

    auto objective = [&](const std::vector<double>& x) {
        const ComplexMatrix rho = rho_from_params(x, d);
        double l = 0.0;
        for (std::size_t s = 0; s < projs.size(); ++s) {
            const double nbar = std::max(norm * (projs[s] * rho).trace().real(), 1e-9);
            const double diff = nbar - counts[s];
            l += diff * diff / (2.0 * nbar);
        }
        return l;
    };

    const NmResult nm = nelder_mead(objective, x0, opt.max_iterations, opt.tolerance);
    MleResult out{{pair ? std::vector<int>{2, 2} : std::vector<int>{2},
                   rho_from_params(nm.x, d)},
                  nm.f, nm.iterations, nm.converged};
    return out;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    const ComplexMatrix sq = hermitian_sqrt(a.mat);
    const std::vector<double> ev = hermitian_eigenvalues(sq * b.mat * sq);
    double s = 0.0;
    for (double e : ev) s += std::sqrt(std::max(e, 0.0));
    return s * s;
}

}  // namespace entsim
