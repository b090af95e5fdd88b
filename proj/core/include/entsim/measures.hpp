#pragma once

#include "entsim/states.hpp"

namespace entsim {

// Smallest eigenvalue of the partial transpose; negative iff NPT-entangled.
double min_pt_eigenvalue(const DensityMatrix& rho);

// Negativity: sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix& rho);

// log2(2 N + 1) for qubit pairs, log2(||rho^Tb||_1) in general.
double log_negativity(const DensityMatrix& rho);

// Wootters concurrence for two-qubit states.
double concurrence(const DensityMatrix& rho);

// Entanglement of formation from the concurrence (two qubits).
double eof_from_concurrence(double c);
double entanglement_of_formation(const DensityMatrix& rho);

// Trace norm of the realigned matrix; > 1 certifies entanglement (CCNR).
double realignment_norm(const DensityMatrix& rho);

// Pure bipartite states written by their Schmidt coefficients.
double pure_negativity(const SchmidtState& s);
double pure_log_negativity(const SchmidtState& s);
double pure_eof(const SchmidtState& s);                 // two qubits only
double pure_entanglement_entropy(const SchmidtState& s);  // -sum c^2 log2 c^2
double pure_qutrit_concurrence(const SchmidtState& s);    // I-concurrence style
double pure_qutrit_i_concurrence_sq(const SchmidtState& s);

double binary_entropy(double x);

}  // namespace entsim
