#pragma once

#include <vector>

namespace entsim {

// Sellmeier indices for beta barium borate; wavelength in micrometres.
double bbo_n_ordinary(double lambda_um);
double bbo_n_extraordinary(double lambda_um);

// Effective extraordinary index at propagation angle theta (radians) from
// the optic axis.
double bbo_n_effective(double lambda_um, double theta_rad);

// Collinear degenerate type-I phase-matching angle (radians) for a pump
// at lambda_pump_um: n_eff(pump, theta) = n_o(2 * pump).
double bbo_phase_match_angle(double lambda_pump_um);

// Coherence time (seconds) and length (metres) from centre wavelength and
// bandwidth, both in metres.
double coherence_time(double lambda_m, double dlambda_m);
double coherence_length(double lambda_m, double dlambda_m);

// exp(-|dt|/tau): first-order field-correlation envelope.
double coherence_envelope(double dt, double tau);

// Pearson correlation coefficient of two equal-length samples.
double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace entsim
