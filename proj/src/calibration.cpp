#include "qst/calibration.hpp"

#include <cmath>
#include <set>

#include "qst/errors.hpp"

namespace qst {

PumpFitResult pump_params(double n00, double n9090, double n4545, double n090, double n900) {
    PumpFitResult out;
    out.d_background = (n090 + n900) / 2.0;
    out.n0 = n00 + n9090 - 2.0 * out.d_background;
    if (out.n0 <= 0.0) {
        throw DomainError("pump_params: N0 must be positive (aligned rates below background)");
    }
    double tan2 = (n9090 - out.d_background) / (n00 - out.d_background);
    if (!(tan2 >= 0.0) || !std::isfinite(tan2)) {
        throw DomainError("pump_params: negative or singular tan^2(theta_p) argument");
    }
    out.theta_p_deg = rad2deg(std::atan(std::sqrt(tan2)));
    double s2t = std::sin(2.0 * deg2rad(out.theta_p_deg));
    double cos_phi = (4.0 * n4545 / out.n0 - 1.0) / s2t;
    if (std::abs(cos_phi) > 1.0) {
        throw DomainError("pump_params: |cos(phi_m)| > 1, inconsistent N(45,45)");
    }
    out.phi_m_deg = rad2deg(std::acos(cos_phi));
    return out;
}

DetectorEfficiency detector_efficiency(double coincidence_rate, double singles_other_arm) {
    if (singles_other_arm <= 0.0) {
        throw DomainError("detector_efficiency: singles rate must be positive");
    }
    if (coincidence_rate < 0.0) {
        throw DomainError("detector_efficiency: coincidence rate must be nonnegative");
    }
    DetectorEfficiency e;
    e.eta = coincidence_rate / singles_other_arm;
    e.within_unit = e.eta <= 1.0;
    return e;
}

PowerFit power_fit(const std::vector<PowerPoint>& points) {
    std::set<double> distinct;
    for (const auto& p : points) distinct.insert(p.power);
    if (distinct.size() < 2) {
        throw DegenerateInputError("power_fit: need at least two distinct power values");
    }
    double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : points) {
        sx += p.power;
        sy += p.cc_rate;
        sxx += p.power * p.power;
        sxy += p.power * p.cc_rate;
    }
    double denom = n * sxx - sx * sx;
    PowerFit fit;
    fit.slope_alpha = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope_alpha * sx) / n;
    double ss = 0.0;
    for (const auto& p : points) {
        double r = p.cc_rate - (fit.slope_alpha * p.power + fit.intercept);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

double chi2_effective(double slope_alpha_per_watt, const CrystalParams& c) {
    if (slope_alpha_per_watt <= 0.0 || c.length_m <= 0.0 || c.area_m2 <= 0.0 ||
        c.n_pump <= 0.0 || c.n_spdc <= 0.0 || c.omega_p <= 0.0 || c.pulse_duty <= 0.0) {
        throw DomainError("chi2_effective: all inputs must be positive");
    }
    constexpr double eps0 = 8.8541878128e-12;  // F/m
    constexpr double c_light = 2.99792458e8;   // m/s
    // alpha = duty * (omega_p/3pi) * (L^2/A) / P0  =>  P0
    double p0 = c.pulse_duty * (c.omega_p / (3.0 * kPi)) * (c.length_m * c.length_m / c.area_m2) /
                slope_alpha_per_watt;
    double omega_spdc = c.omega_p / 2.0;
    double chi2 = 8.0 * eps0 * c.n_pump * c.n_pump * c.n_spdc * c_light * c_light * c_light /
                  (omega_spdc * omega_spdc * p0);
    return std::sqrt(chi2);
}

}  // namespace qst
