#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace entsim {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is at most
// 9x9 (two qutrits), so no effort is spent on blocking or sparsity.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dA, int dB, Subsystem which);
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dA, int dB, Subsystem traced);

// Realignment map used by the separability trace-norm bound: the output is
// dA^2 x dB^2 and row/column indices pair the two row (resp. column)
// subsystem labels of the input.
ComplexMatrix realign(const ComplexMatrix& rho, int dA, int dB);
ComplexMatrix realign_inverse(const ComplexMatrix& t, int dA, int dB);

struct EigResult {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // columns are eigenvectors, same order
};

// Cyclic Jacobi eigensolver for Hermitian matrices. Suited to the <=9x9
// matrices here; sweeps until the off-diagonal Frobenius mass drops
// below 1e-14. Input is symmetrized first; throws if it is not Hermitian
// to within 1e-10 in max-entry norm.
EigResult hermitian_eig(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Singular values as sqrt(eig(m† m)); tiny negative eigenvalues above
// -1e-12 are clamped to zero.
std::vector<double> singular_values(const ComplexMatrix& m);
double trace_norm(const ComplexMatrix& m);

// Hermitian PSD square root via eigendecomposition (negatives above -1e-12
// clamped to zero).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& h);

}  // namespace entsim
