#pragma once

#include <functional>
#include <vector>

namespace entsim {

// Pure two-qubit state c0|00> + c1|11>, c1 = sqrt(1 - c0^2). Each measure
// is rescaled to a percentage deficit Q = (max - value)/max so different
// quantifiers can be compared on one scale.
struct QubitComparison {
    double c0, c1;
    double neg, logneg, eof;
    double q_neg, q_logneg, q_eof;       // deficits in [0,1]
    double d_nl, d_el, d_ne;             // pairwise deficit gaps
};

QubitComparison compare_qubit_pure(double c0);

double d_negativity_dc0(double c0);
double d_log_negativity_dc0(double c0);
double d_eof_dc0(double c0);

struct Extremum1 {
    double arg;
    double value;
};

// Interior local maxima of f on (lo, hi), grid scan plus golden-section
// refinement, returned in increasing arg order.
std::vector<Extremum1> local_maxima(const std::function<double(double)>& f, double lo,
                                    double hi, int grid = 2000);

// Pure two-qutrit state c0|00> + c1|11> + c2|22>.
struct QutritComparison {
    double c0, c1, c2;
    double entropy, neg, conc, iconc;
    double q_entropy, q_neg, q_conc;
    double d_ne, d_ec, d_nc;
};

QutritComparison compare_qutrit_pure(double c0, double c1);

struct Extremum2 {
    double c0, c1;
    double value;
};

// Maximum of f over the Schmidt simplex c0, c1 >= 0, c0^2 + c1^2 <= 1.
Extremum2 max_over_qutrit_simplex(const std::function<double(double, double)>& f,
                                  int grid = 400);

// Three-qubit families c0|000> + c1|111> (GHZ-type) and the W state.
double ghz_tangle(double c0);        // residual three-tangle
double ghz_g_measure(double c0);     // global measure, equals the tangle here
double w_tangle();                   // identically zero
double w_g_measure();                // 8/9

// Distance from the nearest maximally entangled two-qubit pure state:
// distance_D evaluates the Frobenius norm of the projector difference,
// closeness_C the overlap closed form; the two agree identically.
double geometric_distance(double c0);
double closeness_C(double c0);
double distance_D(double c0);

// Largest CHSH value of the two-qubit pure state and its deficit from the
// Tsirelson bound, rescaled like the other quantifiers.
double bell_chsh_max(double c0);
double bell_deficit(double c0);

}  // namespace entsim
