#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entsim/states.hpp"

namespace entsim {

// Wave-plate Jones matrices; fast axis angle in degrees from vertical.
ComplexMatrix qwp_jones(double angle_deg);
ComplexMatrix hwp_jones(double angle_deg);

struct PlateSetting {
    double qwp_deg = 0.0;
    double hwp_deg = 0.0;
};

// Polarization state transmitted by QWP -> HWP -> horizontal polarizer,
// as a 2x1 column (H, V components).
ComplexMatrix analyzer_state(const PlateSetting& s);

// Plate settings projecting onto H, V, D, A, R, L in that order.
std::array<PlateSetting, 6> canonical_settings();

// Index pairs into canonical_settings() for the three Stokes axes:
// (D,A), (R,L), (H,V).
std::array<std::array<int, 2>, 3> stokes_axes();

struct TomoRecord {
    double arm1_qwp = 0.0, arm1_hwp = 0.0;
    double arm2_qwp = 0.0, arm2_hwp = 0.0;
    double counts = 0.0;
    double duration_s = 1.0;
};

// Counts for the 6 (single qubit) or 36 (qubit pair) canonical analyzer
// settings. With a seed the counts are Poisson-distributed around the
// expected rate; otherwise they are exact expectations.
std::vector<TomoRecord> simulate_counts(const DensityMatrix& rho, double counts_per_setting,
                                        std::optional<std::uint64_t> seed = std::nullopt,
                                        double duration_s = 1.0);

// Direct Stokes/linear-inversion estimates. May be non-positive for noisy
// counts; that is what the likelihood fit repairs.
StokesVector stokes_from_counts(const std::vector<TomoRecord>& records);
DensityMatrix linear_inversion(const std::vector<TomoRecord>& records);

struct MleOptions {
    int max_iterations = 100000;
    double tolerance = 1e-10;
};

struct MleResult {
    DensityMatrix rho;
    double likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Maximum-likelihood reconstruction over the Cholesky-style parametrization
// rho = T^dag T / Tr(T^dag T), T lower triangular, fitted by Nelder-Mead
// from the clamped linear-inversion seed.
MleResult mle_reconstruct(const std::vector<TomoRecord>& records, const MleOptions& opt = {});

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace entsim
