#include "entsim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace entsim {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dA, int dB, Subsystem which) {
    if (rho.rows() != rho.cols() || rho.rows() != dA * dB)
        throw std::invalid_argument("partial_transpose: dimension mismatch");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (int ia = 0; ia < dA; ++ia)
        for (int ib = 0; ib < dB; ++ib)
            for (int ja = 0; ja < dA; ++ja)
                for (int jb = 0; jb < dB; ++jb) {
                    int r = ia * dB + ib, c = ja * dB + jb;
                    int rr = (which == Subsystem::A) ? ja * dB + ib : ia * dB + jb;
                    int cc = (which == Subsystem::A) ? ia * dB + jb : ja * dB + ib;
                    out(rr, cc) = rho(r, c);
                }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dA, int dB, Subsystem traced) {
    if (rho.rows() != rho.cols() || rho.rows() != dA * dB)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    if (traced == Subsystem::B) {
        ComplexMatrix out(dA, dA);
        for (int ia = 0; ia < dA; ++ia)
            for (int ja = 0; ja < dA; ++ja)
                for (int k = 0; k < dB; ++k) out(ia, ja) += rho(ia * dB + k, ja * dB + k);
        return out;
    }
    ComplexMatrix out(dB, dB);
    for (int ib = 0; ib < dB; ++ib)
        for (int jb = 0; jb < dB; ++jb)
            for (int k = 0; k < dA; ++k) out(ib, jb) += rho(k * dB + ib, k * dB + jb);
    return out;
}

ComplexMatrix realign(const ComplexMatrix& rho, int dA, int dB) {
    if (rho.rows() != rho.cols() || rho.rows() != dA * dB)
        throw std::invalid_argument("realign: dimension mismatch");
    ComplexMatrix out(dA * dA, dB * dB);
    for (int ia = 0; ia < dA; ++ia)
        for (int ib = 0; ib < dB; ++ib)
            for (int ja = 0; ja < dA; ++ja)
                for (int jb = 0; jb < dB; ++jb)
                    out(ja * dA + ia, jb * dB + ib) = rho(ia * dB + ib, ja * dB + jb);
    return out;
}

ComplexMatrix realign_inverse(const ComplexMatrix& t, int dA, int dB) {
    if (t.rows() != dA * dA || t.cols() != dB * dB)
        throw std::invalid_argument("realign_inverse: dimension mismatch");
    ComplexMatrix rho(dA * dB, dA * dB);
    for (int ia = 0; ia < dA; ++ia)
        for (int ib = 0; ib < dB; ++ib)
            for (int ja = 0; ja < dA; ++ja)
                for (int jb = 0; jb < dB; ++jb)
                    rho(ia * dB + ib, ja * dB + jb) = t(ja * dA + ia, jb * dB + ib);
    return rho;
}

namespace {

// One complex Jacobi rotation zeroing h(p,q). The rotation acts on the
// (p,q) plane as U = [[c, -s*e^{i phi}], [s*e^{-i phi}, c]] with
// h(p,q) = r e^{i phi}; V accumulates eigenvectors.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& v, int p, int q) {
    const cplx hpq = h(p, q);
    const double r = std::abs(hpq);
    if (r == 0.0) return;
    const cplx phase = hpq / r;
    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = h.rows();
    // columns: [*,p] and [*,q]
    for (int k = 0; k < n; ++k) {
        const cplx hkp = h(k, p), hkq = h(k, q);
        h(k, p) = c * hkp - s * std::conj(phase) * hkq;
        h(k, q) = s * phase * hkp + c * hkq;
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
    // rows: [p,*] and [q,*] (U† from the left)
    for (int k = 0; k < n; ++k) {
        const cplx hpk = h(p, k), hqk = h(q, k);
        h(p, k) = c * hpk - s * phase * hqk;
        h(q, k) = s * std::conj(phase) * hpk + c * hqk;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = cplx(h(p, p).real(), 0.0);
    h(q, q) = cplx(h(q, q).real(), 0.0);
}

double offdiag_mass(const ComplexMatrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return s;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h_in) {
    if (h_in.rows() != h_in.cols()) throw std::invalid_argument("hermitian_eig: not square");
    const int n = h_in.rows();

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dev = std::max(dev, std::abs(h_in(i, j) - std::conj(h_in(j, i))));
    if (dev > 1e-10) throw std::invalid_argument("hermitian_eig: input not Hermitian");

    // symmetrize to suppress roundoff before iterating
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (h_in(i, j) + std::conj(h_in(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, h.frobenius_norm());
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_mass(h) < 1e-14 * scale * scale) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });

    EigResult res;
    res.values.resize(n);
    res.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        res.values[j] = h(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
    }
    return res;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return hermitian_eig(h).values;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const ComplexMatrix g = m.adjoint() * m;
    std::vector<double> ev = hermitian_eigenvalues(g);
    std::vector<double> sv;
    sv.reserve(ev.size());
    for (double l : ev) {
        if (l < 0.0) {
            if (l < -1e-12) throw std::runtime_error("singular_values: gram matrix not PSD");
            l = 0.0;
        }
        sv.push_back(std::sqrt(l));
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double trace_norm(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace_norm: not square");
    double s = 0.0;
    for (double sv : singular_values(m)) s += sv;
    return s;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& h) {
    EigResult e = hermitian_eig(h);
    const int n = h.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double l = e.values[k];
        if (l < 0.0) {
            if (l < -1e-9) throw std::runtime_error("hermitian_sqrt: input not PSD");
            l = 0.0;
        }
        const double sl = std::sqrt(l);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += sl * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return out;
}

}  // namespace entsim
