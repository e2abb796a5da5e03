#pragma once

// CHSH analysis of 16 polarizer-angle coincidence measurements:
// correlations E, the Bell parameter S with its propagated uncertainty,
// visibilities, and accidental-rate handling.

#include <array>
#include <vector>

#include "qst/types.hpp"

namespace qst {

struct BellRecord {
    double theta_a = 0.0;  // polarizer angles, degrees
    double theta_b = 0.0;
    double n_a = 0.0;      // singles, cps
    double n_b = 0.0;
    double n_c = 0.0;      // coincidences, cps
    double dn_c = 0.0;     // measured uncertainty of n_c, cps (0 = unknown)
    double t_s = 1.0;
    double tau_s = 0.0;
};

struct ChshAngles {
    double a = -45.0;
    double a_prime = 0.0;
    double b = -22.5;
    double b_prime = 22.5;
};

struct BellResult {
    std::array<double, 4> e_values{};  // E(a,b), E(a,b'), E(a',b), E(a',b')
    double s_value = 0.0;
    double s_sigma = 0.0;
    bool accidentals_subtracted = false;
};

// Accidental coincidence rate tau*N_A*N_B/T, matching the tabulated counts.
double accidental_rate(double n_a_cps, double n_b_cps, double t_s, double tau_s);

// E = (N1+N2-N3-N4)/(N1+N2+N3+N4) from records at (a,b), (a+90,b+90),
// (a,b+90), (a+90,b); accidentals optionally subtracted, negatives clamped.
double correlation_e(const std::array<BellRecord, 4>& records,
                     bool subtract_accidentals = false);

// S = |E(a,b)-E(a,b')| + |E(a',b)+E(a',b')| from records covering the 16
// combinations of {a,a+90,a',a'+90} x {b,b+90,b',b'+90}. sigma_S propagates
// per-record count uncertainties (dn_c when given, else Poisson sqrt(n*T)/T).
BellResult chsh_s(const std::vector<BellRecord>& records, const ChshAngles& angles,
                  bool subtract_accidentals = false);

// Fringe contrast (N_par - N_perp)/(N_par + N_perp) from records at
// (t,t), (t,t+90), (t+90,t), (t+90,t+90).
double visibility(const std::array<BellRecord, 4>& records);

}  // namespace qst
