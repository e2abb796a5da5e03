#pragma once

// Experiment-tuning computations: pump-state parameters from four
// coincidence settings, detector efficiency, and the pump-power fit with
// effective-susceptibility back-out.

#include <vector>

#include "qst/types.hpp"

namespace qst {

struct PumpFitResult {
    double d_background = 0.0;  // cps
    double n0 = 0.0;            // cps
    double theta_p_deg = 0.0;
    double phi_m_deg = 0.0;     // reported in [0, 180]; only cos(phi_m) is determined
};

struct PowerFit {
    double slope_alpha = 0.0;   // cps per power unit of the input
    double intercept = 0.0;     // cps
    double residual_rms = 0.0;  // cps
};

struct CrystalParams {
    double length_m = 0.0;
    double area_m2 = 0.0;
    double n_pump = 1.0;
    double n_spdc = 1.0;
    double omega_p = 0.0;       // rad/s
    double pulse_duty = 1.0;    // dt_p/T_p; 1 for CW
};

struct DetectorEfficiency {
    double eta = 0.0;
    bool within_unit = true;    // false flags eta > 1
};

// D = (N(0,90)+N(90,0))/2, N0 = N(0,0)+N(90,90)-2D,
// tan^2(theta_p) = (N(90,90)-D)/(N(0,0)-D),
// cos(phi_m) = (4 N(45,45)/N0 - 1)/sin(2 theta_p).
PumpFitResult pump_params(double n00, double n9090, double n4545, double n090, double n900);

DetectorEfficiency detector_efficiency(double coincidence_rate, double singles_other_arm);

struct PowerPoint {
    double power = 0.0;   // mW by convention of the scan file
    double cc_rate = 0.0; // cps
};
PowerFit power_fit(const std::vector<PowerPoint>& points);

// Inverts R_c = duty * (omega_p / 3pi) * (L^2/A) * (P_p/P0) with
// P0 = 8 eps0 n_p^2 n_spdc c^3 / (omega_spdc^2 chi_eff^2), omega_spdc =
// omega_p/2, for chi_eff given the fitted slope alpha = R_c/P_p in
// cps per watt.
double chi2_effective(double slope_alpha_per_watt, const CrystalParams& crystal);

}  // namespace qst
