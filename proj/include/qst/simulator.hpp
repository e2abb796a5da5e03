#pragma once

// Forward models used as the test oracle for the analysis pipeline:
// SPDC pair state from pump parameters, quantum and hidden-variable
// coincidence probabilities, multi-pair weights, and synthetic count
// generation with Poisson noise and accidentals.

#include <cstdint>
#include <vector>

#include "qst/polarization.hpp"
#include "qst/tomography.hpp"
#include "qst/types.hpp"

namespace qst {

struct PumpState {
    double theta_p_deg = 45.0;  // pump polarization angle from vertical
    double phi_deg = 0.0;       // total phase (compensator + crystal dispersion)
};

struct DetectorModel {
    double n_flux = 100.0;       // expected pair detections per second
    double window_tau = 0.0;     // coincidence window [s]
    double integration_t = 1.0;  // acquisition time per setting [s]
    double singles_a = 0.0;      // cps
    double singles_b = 0.0;      // cps
};

struct PairWeights {
    double q_param = 0.0;
    std::vector<double> weights;  // index = pair number, sums to 1
};

enum class Outcome { H, V };

// Pure pair state cos(theta_p)|HH> + e^{i phi} sin(theta_p)|VV>.
Mat4 spdc_state(const PumpState& p);

// Coincidence probability for polarizer outcomes (o_alpha, o'_beta) on
// the pump state; P_VV is |sin a sin b cos tp + e^{i phi} cos a cos b sin tp|^2.
double quantum_outcome_probability(Outcome o_a, Outcome o_b, double alpha_deg,
                                   double beta_deg, const PumpState& p);
double quantum_pvv(double alpha_deg, double beta_deg, const PumpState& p);

// Hidden-variable coincidence probability 1/2 - |beta-alpha|/pi with the
// relative angle folded into [0, pi/2].
double hvt_pvv(double alpha_deg, double beta_deg);

// Expected coincidence rate N <psi|rho|psi> plus the accidental rate
// tau*Na*Nb/T. Throws NonPhysicalState if rho fails physicality checks.
double predict_counts(const Mat4& rho, const ProjectiveSetting& s, const DetectorModel& d);

// Poisson-sampled synthetic records for the given settings; counts are
// drawn on integrated counts (rate*T) and divided back to rates.
// Deterministic for a fixed seed.
std::vector<CountRecord> sample_counts(const Mat4& rho,
                                       const std::array<ProjectiveSetting, 16>& settings,
                                       const DetectorModel& d, std::uint64_t seed);

// Pair-number weights w[n] ~ (n+1) q^n renormalized over 0..n_max.
PairWeights pair_weights(double q, int n_max);

// Single-arm probability of a V-outcome at polarizer angle beta.
double marginal_probability(const Mat4& rho, Subsystem arm, double beta_deg);

}  // namespace qst
