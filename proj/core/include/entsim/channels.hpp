#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entsim/states.hpp"

namespace entsim {

struct KrausChannel {
    std::vector<int> dims;
    std::vector<ComplexMatrix> ops;

    // max-entry residual of sum K†K - I
    double completeness_residual() const;
    void validate() const;   // throws if residual > 1e-10
};

struct AdcParams {
    double p = 0.0;          // qubit decay probability
    double p1 = 0.0, p2 = 0.0;   // qutrit level decay probabilities
};

// p = 1 - exp(-Gamma t) for spontaneous decay; p = sin^2(2 theta) for a
// half-wave plate at angle theta (degrees) from the vertical.
double p_from_decay_time(double gamma, double t);
double p_from_hwp_angle_deg(double theta_deg);

KrausChannel adc_qubit(double p);
KrausChannel adc_qutrit(double p1, double p2);
KrausChannel pair_channel(const KrausChannel& left, const KrausChannel& right);

DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch);

enum class Luo { Identity, SigmaX, F01, F02, F102, F201 };

Luo luo_from_name(const std::string& name);
std::string luo_name(Luo u);

// Permutation unitaries: sigma_x for qubits; pairwise swaps F01/F02 and the
// three-cycles F102/F201 for qutrits.
ComplexMatrix local_unitary(Luo u, int dim);

DensityMatrix apply_local(const DensityMatrix& rho, const ComplexMatrix& u1,
                          const ComplexMatrix& u2);

struct LuoPair {
    Luo u1 = Luo::Identity;
    Luo u2 = Luo::Identity;
};

// Build the pair ADC channel for the given subsystem dimensions. For a
// qutrit subsystem the level decays are (params.p1, params.p2).
KrausChannel adc_pair_for_dims(const std::vector<int>& dims, const AdcParams& stage);

// Evolve through stage1, optionally interrupt with local unitaries, then
// evolve through stage2.
DensityMatrix staged_evolution(const DensityMatrix& rho0, const AdcParams& stage1,
                               const std::optional<LuoPair>& luo, const AdcParams& stage2);

// Single-shot Kraus sets equivalent to two damping stages (3 operators) and
// to damping -> NOT -> damping (4 operators) on one qubit. The equivalence
// with the staged composition is exact and is asserted in tests.
KrausChannel composite_adc_kraus(double p, double pprime);
KrausChannel not_mid_kraus(double p, double pprime);

}  // namespace entsim
