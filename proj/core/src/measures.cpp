#include "entsim/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "entsim/linalg.hpp"

namespace entsim {

double min_pt_eigenvalue(const DensityMatrix& rho) {
    const ComplexMatrix pt = partial_transpose(rho.mat, rho.dimA(), rho.dimB(), Subsystem::B);
    const std::vector<double> ev = hermitian_eigenvalues(pt);
    return ev.front();
}

double negativity(const DensityMatrix& rho) {
    const ComplexMatrix pt = partial_transpose(rho.mat, rho.dimA(), rho.dimB(), Subsystem::B);
    double n = 0.0;
    for (double e : hermitian_eigenvalues(pt))
        if (e < 0.0) n -= e;
    return n;
}

double log_negativity(const DensityMatrix& rho) {
    const ComplexMatrix pt = partial_transpose(rho.mat, rho.dimA(), rho.dimB(), Subsystem::B);
    return std::log2(trace_norm(pt));
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dimA() != 2 || rho.dimB() != 2)
        throw std::invalid_argument("concurrence needs a two-qubit state");
    // spin-flipped state: (sy x sy) conj(rho) (sy x sy)
    ComplexMatrix sy(2, 2);
    sy(0, 1) = cplx(0.0, -1.0);
    sy(1, 0) = cplx(0.0, 1.0);
    const ComplexMatrix yy = tensor_product(sy, sy);
    const ComplexMatrix rtilde = yy * rho.mat.conjugate() * yy;
    // eigenvalues of rho*rtilde equal those of sqrt(rho)*rtilde*sqrt(rho),
    // which is Hermitian PSD.
    const ComplexMatrix sq = hermitian_sqrt(rho.mat);
    std::vector<double> ev = hermitian_eigenvalues(sq * rtilde * sq);
    for (double& e : ev) e = std::sqrt(std::max(e, 0.0));
    // ascending order: largest is ev[3]
    return std::max(0.0, ev[3] - ev[2] - ev[1] - ev[0]);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const DensityMatrix& rho) {
    return eof_from_concurrence(concurrence(rho));
}

double realignment_norm(const DensityMatrix& rho) {
    // nuclear norm of the (generally rectangular) realigned matrix
    double s = 0.0;
    for (double sv : singular_values(realign(rho.mat, rho.dimA(), rho.dimB()))) s += sv;
    return s;
}

static double schmidt_sum(const SchmidtState& s) {
    double t = 0.0;
    for (double c : s.coeffs) t += c;
    return t;
}

double pure_negativity(const SchmidtState& s) {
    const double t = schmidt_sum(s);
    return 0.5 * (t * t - 1.0);
}

double pure_log_negativity(const SchmidtState& s) {
    return 2.0 * std::log2(schmidt_sum(s));
}

double pure_eof(const SchmidtState& s) {
    if (s.coeffs.size() != 2)
        throw std::invalid_argument("two Schmidt coefficients expected");
    const double c = 2.0 * s.coeffs[0] * s.coeffs[1];
    return eof_from_concurrence(c);
}

double pure_entanglement_entropy(const SchmidtState& s) {
    double e = 0.0;
    for (double c : s.coeffs) {
        const double l = c * c;
        if (l > 0.0) e -= l * std::log2(l);
    }
    return e;
}

double pure_qutrit_i_concurrence_sq(const SchmidtState& s) {
    if (s.coeffs.size() != 3)
        throw std::invalid_argument("three Schmidt coefficients expected");
    const double a = s.coeffs[0] * s.coeffs[0];
    const double b = s.coeffs[1] * s.coeffs[1];
    const double c = s.coeffs[2] * s.coeffs[2];
    return 3.0 * (a * b + b * c + c * a);
}

double pure_qutrit_concurrence(const SchmidtState& s) {
    return std::sqrt(pure_qutrit_i_concurrence_sq(s));
}

}  // namespace entsim
