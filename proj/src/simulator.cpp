#include "qst/simulator.hpp"

#include <cmath>
#include <random>

#include "qst/bell.hpp"
#include "qst/errors.hpp"

namespace qst {

Mat4 spdc_state(const PumpState& p) {
    const double tp = deg2rad(p.theta_p_deg);
    const double phi = deg2rad(p.phi_deg);
    Ket4 psi = Ket4::Zero();
    psi(0) = std::cos(tp);                                // |HH>
    psi(3) = std::polar(std::sin(tp), phi);               // e^{i phi} |VV>
    return psi * psi.adjoint();
}

double quantum_outcome_probability(Outcome o_a, Outcome o_b, double alpha_deg,
                                   double beta_deg, const PumpState& p) {
    const double a = deg2rad(alpha_deg);
    const double b = deg2rad(beta_deg);
    const double tp = deg2rad(p.theta_p_deg);
    const double phi = deg2rad(p.phi_deg);
    // <V_t|H> = sin t, <V_t|V> = cos t; <H_t|H> = cos t, <H_t|V> = -sin t.
    const double fa_h = (o_a == Outcome::V) ? std::sin(a) : std::cos(a);
    const double fa_v = (o_a == Outcome::V) ? std::cos(a) : -std::sin(a);
    const double fb_h = (o_b == Outcome::V) ? std::sin(b) : std::cos(b);
    const double fb_v = (o_b == Outcome::V) ? std::cos(b) : -std::sin(b);
    const cplx amp = std::cos(tp) * fa_h * fb_h +
                     std::polar(std::sin(tp), phi) * fa_v * fb_v;
    return std::norm(amp);
}

double quantum_pvv(double alpha_deg, double beta_deg, const PumpState& p) {
    return quantum_outcome_probability(Outcome::V, Outcome::V, alpha_deg, beta_deg, p);
}

double hvt_pvv(double alpha_deg, double beta_deg) {
    double d = std::fmod(std::abs(deg2rad(beta_deg) - deg2rad(alpha_deg)), kPi);
    if (d > kPi / 2) d = kPi - d;
    return 0.5 - d / kPi;
}

namespace {

void require_physical(const Mat4& rho, const char* who) {
    auto f = physicality(rho, 1e-6);
    if (!f.all()) {
        throw NonPhysicalStateError(std::string(who) + ": density matrix fails physicality checks");
    }
}

}  // namespace

double predict_counts(const Mat4& rho, const ProjectiveSetting& s, const DetectorModel& d) {
    require_physical(rho, "predict_counts");
    Ket4 psi = two_qubit_projector(s);
    double rate = d.n_flux * (psi.adjoint() * rho * psi)(0).real();
    rate += accidental_rate(d.singles_a, d.singles_b, d.integration_t, d.window_tau);
    return std::max(rate, 0.0);
}

std::vector<CountRecord> sample_counts(const Mat4& rho,
                                       const std::array<ProjectiveSetting, 16>& settings,
                                       const DetectorModel& d, std::uint64_t seed) {
    require_physical(rho, "sample_counts");
    std::mt19937_64 rng(seed);
    std::vector<CountRecord> out;
    out.reserve(16);
    const auto& labels = standard_labels();
    const auto& std_set = standard_settings();
    auto is_standard = [&](int nu) {
        const auto& s = settings[nu];
        const auto& t = std_set[nu];
        return std::abs(s.h_a - t.h_a) < 1e-9 && std::abs(s.q_a - t.q_a) < 1e-9 &&
               std::abs(s.h_b - t.h_b) < 1e-9 && std::abs(s.q_b - t.q_b) < 1e-9;
    };
    for (int nu = 0; nu < 16; ++nu) {
        CountRecord rec;
        rec.nu = nu + 1;
        rec.label = is_standard(nu) ? labels[nu] : "";
        rec.setting = settings[nu];
        rec.n_a = d.singles_a;
        rec.n_b = d.singles_b;
        rec.t_s = d.integration_t;
        rec.tau_s = d.window_tau;
        double mean = predict_counts(rho, settings[nu], d) * d.integration_t;
        std::poisson_distribution<long long> poisson(mean);
        rec.n_c = (mean > 0.0) ? static_cast<double>(poisson(rng)) / d.integration_t : 0.0;
        out.push_back(rec);
    }
    return out;
}

PairWeights pair_weights(double q, int n_max) {
    if (q < 0.0 || q >= 1.0) {
        throw DomainError("pair_weights: q must lie in [0, 1)");
    }
    PairWeights out;
    out.q_param = q;
    out.weights.resize(n_max + 1);
    double sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        out.weights[n] = (n + 1) * std::pow(q, n);
        sum += out.weights[n];
    }
    for (auto& w : out.weights) w /= sum;
    return out;
}

double marginal_probability(const Mat4& rho, Subsystem arm, double beta_deg) {
    require_physical(rho, "marginal_probability");
    Mat2 reduced = partial_trace(rho, arm);
    const double b = deg2rad(beta_deg);
    Ket2 v_beta;
    v_beta << std::sin(b), std::cos(b);  // V polarizer rotated by beta
    return (v_beta.adjoint() * reduced * v_beta)(0).real();
}

}  // namespace qst
