#include "entsim/states.hpp"

#include <cmath>

namespace entsim {

int DensityMatrix::dim() const {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
}

void DensityMatrix::validate() const {
    if (mat.rows() != mat.cols() || mat.rows() != dim())
        throw std::invalid_argument("DensityMatrix: dims inconsistent with matrix");
    if (!mat.is_finite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
    if (std::abs(mat.trace() - cplx(1.0)) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace != 1");
    const ComplexMatrix d = mat - mat.adjoint();
    if (d.max_abs() > 1e-10) throw std::invalid_argument("DensityMatrix: not Hermitian");
    const std::vector<double> ev = hermitian_eigenvalues(mat);
    if (ev.front() < -1e-9) throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

void SchmidtState::validate() const {
    double s = 0.0;
    for (double c : coeffs) {
        if (c < 0.0) throw std::invalid_argument("SchmidtState: negative coefficient");
        s += c * c;
    }
    if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("SchmidtState: not normalized");
}

ComplexMatrix pauli(int i) {
    ComplexMatrix m(2, 2);
    switch (i) {
        case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = cplx(0.0, 1.0); m(1, 0) = cplx(0.0, -1.0); break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::invalid_argument("pauli: index out of range");
    }
    return m;
}

DensityMatrix x_state(double u, cplx v) {
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("x_state: u out of [0,1]");
    if (std::norm(v) > u * (1.0 - u) + 1e-12)
        throw std::invalid_argument("x_state: |v|^2 > u(1-u) violates positivity");
    DensityMatrix rho{{2, 2}, ComplexMatrix(4, 4)};
    rho.mat(0, 0) = u;
    rho.mat(3, 3) = 1.0 - u;
    rho.mat(0, 3) = v;
    rho.mat(3, 0) = std::conj(v);
    return rho;
}

namespace {

DensityMatrix general_x(double a, double b, double c, double d, cplx z, bool outer_corner) {
    if (std::abs(a + b + c + d - 1.0) > 1e-12)
        throw std::invalid_argument("general_x_state: diagonal does not sum to 1");
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("general_x_state: negative population");
    const double bound = outer_corner ? a * d : b * c;
    if (std::norm(z) > bound + 1e-12)
        throw std::invalid_argument("general_x_state: coherence violates positivity");
    DensityMatrix rho{{2, 2}, ComplexMatrix(4, 4)};
    rho.mat(3, 3) = a;   // |11>, both excited
    rho.mat(2, 2) = b;   // |10>
    rho.mat(1, 1) = c;   // |01>
    rho.mat(0, 0) = d;   // |00>, both ground
    if (outer_corner) {
        rho.mat(3, 0) = z;
        rho.mat(0, 3) = std::conj(z);
    } else {
        rho.mat(2, 1) = z;
        rho.mat(1, 2) = std::conj(z);
    }
    return rho;
}

}  // namespace

DensityMatrix general_x_state_rho2(double a, double b, double c, double d, cplx z) {
    return general_x(a, b, c, d, z, true);
}

DensityMatrix general_x_state_rho1(double a, double b, double c, double d, cplx z) {
    return general_x(a, b, c, d, z, false);
}

DensityMatrix qubit_qutrit_state_I(double x) {
    if (x < 0.0 || x >= 1.0 / 3.0)
        throw std::invalid_argument("qubit_qutrit_state_I: x out of [0,1/3)");
    // basis |00>,|01>,|02>,|10>,|11>,|12>
    DensityMatrix rho{{2, 3}, ComplexMatrix(6, 6)};
    const double h = x / 2.0, g = (1.0 - 2.0 * x) / 2.0;
    rho.mat(0, 0) = h;   // |00>
    rho.mat(1, 1) = h;   // |01>
    rho.mat(4, 4) = h;   // |11>
    rho.mat(5, 5) = h;   // |12>
    rho.mat(2, 2) = g;   // |02>
    rho.mat(3, 3) = g;   // |10>
    rho.mat(2, 3) = g;   // |02><10|
    rho.mat(3, 2) = g;
    return rho;
}

DensityMatrix qubit_qutrit_state_II(double x) {
    if (x <= 1.0 / 3.0 || x > 0.5)
        throw std::invalid_argument("qubit_qutrit_state_II: x out of (1/3,1/2]");
    DensityMatrix rho{{2, 3}, ComplexMatrix(6, 6)};
    const double h = x / 2.0, g = (1.0 - 2.0 * x) / 2.0;
    rho.mat(0, 0) = h;   // |00>
    rho.mat(1, 1) = h;   // |01>
    rho.mat(4, 4) = h;   // |11>
    rho.mat(5, 5) = h;   // |12>
    rho.mat(0, 5) = h;   // |00><12|
    rho.mat(5, 0) = h;
    rho.mat(2, 2) = g;   // |02>
    rho.mat(3, 3) = g;   // |10>
    return rho;
}

DensityMatrix two_qutrit_state(double x) {
    if (x < 0.0 || x >= 1.0 / 3.0)
        throw std::invalid_argument("two_qutrit_state: x out of [0,1/3)");
    DensityMatrix rho{{3, 3}, ComplexMatrix(9, 9)};
    const double h = x / 3.0, g = (1.0 - 2.0 * x) / 3.0;
    // |01>,|02>,|10>,|12>,|20>,|21> carry x/3
    for (int k : {1, 2, 3, 5, 6, 7}) rho.mat(k, k) = h;
    // |00>,|11>,|22> carry (1-2x)/3, with coherence |00><22| + h.c.
    rho.mat(0, 0) = g;
    rho.mat(4, 4) = g;
    rho.mat(8, 8) = g;
    rho.mat(0, 8) = g;
    rho.mat(8, 0) = g;
    return rho;
}

DensityMatrix schmidt_pure_density(const SchmidtState& s) {
    s.validate();
    const int dA = s.dims.at(0), dB = s.dims.at(1);
    const int d = std::min(dA, dB);
    if (static_cast<int>(s.coeffs.size()) > d)
        throw std::invalid_argument("schmidt_pure_density: too many coefficients");
    std::vector<cplx> psi(static_cast<size_t>(dA) * dB, 0.0);
    for (size_t i = 0; i < s.coeffs.size(); ++i) psi[i * dB + i] = s.coeffs[i];
    DensityMatrix rho{{dA, dB}, ComplexMatrix(dA * dB, dA * dB)};
    for (int i = 0; i < dA * dB; ++i)
        for (int j = 0; j < dA * dB; ++j) rho.mat(i, j) = psi[i] * std::conj(psi[j]);
    return rho;
}

SchmidtState schmidt_decompose(const std::vector<cplx>& psi, int dA, int dB) {
    if (static_cast<int>(psi.size()) != dA * dB)
        throw std::invalid_argument("schmidt_decompose: dimension mismatch");
    double n2 = 0.0;
    for (const cplx& z : psi) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-10)
        throw std::invalid_argument("schmidt_decompose: vector not normalized");
    ComplexMatrix rho(dA * dB, dA * dB);
    for (int i = 0; i < dA * dB; ++i)
        for (int j = 0; j < dA * dB; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    const ComplexMatrix red = partial_trace(rho, dA, dB, Subsystem::B);
    std::vector<double> ev = hermitian_eigenvalues(red);
    SchmidtState s;
    s.dims = {dA, dB};
    for (auto it = ev.rbegin(); it != ev.rend(); ++it)
        s.coeffs.push_back(std::sqrt(std::max(0.0, *it)));
    // renormalize away eigensolver roundoff
    double ss = 0.0;
    for (double c : s.coeffs) ss += c * c;
    for (double& c : s.coeffs) c /= std::sqrt(ss);
    return s;
}

DensityMatrix stokes_to_density(const StokesVector& s) {
    const double b2 = s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3;
    if (b2 > 1.0 + 1e-9) throw std::invalid_argument("stokes_to_density: Bloch norm > 1");
    DensityMatrix rho{{2}, ComplexMatrix(2, 2)};
    const double v[4] = {s.s0, s.s1, s.s2, s.s3};
    for (int i = 0; i < 4; ++i) rho.mat += 0.5 * v[i] * pauli(i);
    return rho;
}

StokesVector density_to_stokes(const DensityMatrix& rho) {
    if (rho.mat.rows() != 2) throw std::invalid_argument("density_to_stokes: not a single qubit");
    StokesVector s;
    s.s0 = (pauli(0) * rho.mat).trace().real();
    s.s1 = (pauli(1) * rho.mat).trace().real();
    s.s2 = (pauli(2) * rho.mat).trace().real();
    s.s3 = (pauli(3) * rho.mat).trace().real();
    return s;
}

double degree_of_polarization(const StokesVector& s) {
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
}

TwoQubitStokes two_qubit_stokes(const DensityMatrix& rho) {
    if (rho.dims != std::vector<int>{2, 2})
        throw std::invalid_argument("two_qubit_stokes: not a two-qubit state");
    TwoQubitStokes r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.r[i][j] = (tensor_product(pauli(i), pauli(j)) * rho.mat).trace().real();
    return r;
}

DensityMatrix density_from_two_qubit_stokes(const TwoQubitStokes& r) {
    DensityMatrix rho{{2, 2}, ComplexMatrix(4, 4)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho.mat += 0.25 * r.r[i][j] * tensor_product(pauli(i), pauli(j));
    return rho;
}

double purity_of(const ComplexMatrix& m) {
    return (m * m).trace().real();
}

}  // namespace entsim
