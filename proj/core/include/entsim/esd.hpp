#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "entsim/channels.hpp"
#include "entsim/states.hpp"

namespace entsim {

// Closed-form sudden-death thresholds for the one-parameter two-qubit
// X state rho = u|ee><ee| + (1-u)|gg><gg| + v|ee><gg| + v*|gg><ee|
// under amplitude damping on both qubits. All probabilities are the
// cumulative decay parameter p of the qubit channel.
struct XStateEsd {
    double u = 0.0;
    double v = 0.0;  // |v|

    double x() const { return 1.0 - u; }

    // death point with no manipulation
    double p_end() const { return v / x(); }

    // stage-2 threshold if the channel is interrupted at p_n and resumed
    double p0_stage2(double p_n) const { return (v - x() * p_n) / (x() * (1.0 - p_n)); }

    // double NOT (sigma_x on both qubits) applied at p_n: avoidance for
    // p_n < pB, delay for pB < p_n < pA, hastening for p_n > pA
    double pA_double() const { return (1.0 - 2.0 * u) / (2.0 * (1.0 - u)); }
    double pB_double() const { return (v - u) / (1.0 + v - u); }

    // single NOT (sigma_x on one qubit), same regime ordering
    double pA_single() const { return v / (u + 2.0 * v); }
    double pB_single() const { return v * v / (v * v - u + 1.0); }

    // death point (total p) when the NOTs act at p_n
    double p_end_after_double(double p_n) const;
    double p_end_after_single(double p_n) const;
};

// X state with populations diag(a,b,c,d) in the basis
// {|ee>,|eg>,|ge>,|gg>} and a single coherence. "Outer" places it between
// |ee> and |gg>; "inner" between |eg> and |ge>. z is its magnitude.
// The single-NOT expressions refer to the NOT acting on the first qubit
// and are only exact for b = c (they reduce to the simple X-state forms);
// for b != c use manipulation_boundaries, which these are checked against.
struct GeneralXOuterEsd {
    double a, b, c, d, z;

    double p0() const;
    double pA_double() const { return (a - d) / (1.0 + a - d); }
    double pB_double() const;
    double pA_single() const;
    double pB_single() const { return (z * z - c) / (z * z + a); }
};

struct GeneralXInnerEsd {
    double a, b, c, d, z;

    double p0() const;
    double pA_double() const { return (a - d) / (1.0 + a - d); }
    double pB_double() const;
    double pA_single() const;
    double pB_single() const { return 1.0 - (a + c) / ((a + b) * (a + c) + z * z); }
};

// Amplitude damping on a pair of subsystems with a common control
// parameter p. Each level l of subsystem s decays with probability
// ratios[s][l-1] * p. channel_between gives the conditional channel that
// makes the family divisible (two stages compose to the one-shot channel);
// the manipulation protocol instead restarts a fresh channel with its own
// parameter p' after the interruption, which is what channel_to provides.
struct DampingModel {
    std::vector<int> dims;
    std::vector<std::vector<double>> ratios;

    static DampingModel qubit_pair();                        // r = 1 on both
    static DampingModel qubit_qutrit(double r1, double r2);  // qubit r = 1
    static DampingModel qutrit_pair(double r1, double r2);   // same ratios on both

    KrausChannel channel_to(double p) const;
    KrausChannel channel_between(double p_n, double p) const;
};

DensityMatrix evolve(const DensityMatrix& rho0, const DampingModel& model, double p);

// Evolve to p_n, apply the local unitaries, then run a fresh channel with
// its own parameter p_prime.
DensityMatrix evolve_interrupted(const DensityMatrix& rho0, const DampingModel& model,
                                 double p_n, const LuoPair& luo, double p_prime);

// Smallest p in [p_lo, 1] past which the partial transpose stays positive.
// Empty if the state remains entangled for every p < 1.
std::optional<double> find_esd_point(const std::function<double(double)>& min_pt_of_p,
                                     double p_lo = 0.0, int grid = 400, double tol = 1e-9);

std::optional<double> esd_point(const DensityMatrix& rho0, const DampingModel& model);

// Death point of the restarted evolution, in the stage-2 parameter p'.
std::optional<double> esd_point_after(const DensityMatrix& rho0, const DampingModel& model,
                                      double p_n, const LuoPair& luo);

enum class Regime { Avoid, Delay, Hasten, Neutral };

// Compares the restarted death point with the unitaries against the
// restart without them (same p_n, same stage-2 parametrization).
Regime classify_manipulation(const DensityMatrix& rho0, const DampingModel& model,
                             double p_n, const LuoPair& luo, double tol = 1e-7);

// Boundaries of the manipulation regimes as a function of the action
// point p_n in (0, p_esd). avoid_below: avoidance for p_n < value;
// delay_below: delay (or avoidance) for p_n < value; hastening beyond.
struct ManipBoundaries {
    std::optional<double> unmanipulated_esd;
    std::optional<double> avoid_below;
    std::optional<double> delay_below;
    bool any_hasten = false;
    bool any_delay = false;
    bool any_avoid = false;
};

ManipBoundaries manipulation_boundaries(const DensityMatrix& rho0, const DampingModel& model,
                                        const LuoPair& luo, int grid = 200);

// Closed form for the sign-carrying partial-transpose eigenvalue of the
// qubit-qutrit family state (populations x/2 on the four corner levels,
// (1-2x)/2 on the coupled pair) with level decays (0.8 p, 0.6 p).
double qubit_qutrit_min_pt_closed(double x, double p);

}  // namespace entsim
