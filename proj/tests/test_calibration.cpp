#include <doctest.h>

#include <cmath>
#include <random>

#include "qst/calibration.hpp"
#include "qst/errors.hpp"

using namespace qst;

TEST_CASE("pump parameters from the published coincidence rates") {
    auto fit = pump_params(36.82, 37.46, 33.03, 0.26, 0.29);
    CHECK(fit.d_background == doctest::Approx(0.275));
    CHECK(fit.n0 == doctest::Approx(73.73));
    CHECK(fit.theta_p_deg == doctest::Approx(45.2487).epsilon(1e-4));
    CHECK(fit.phi_m_deg == doctest::Approx(37.6297).epsilon(1e-4));
}

TEST_CASE("pump parameter symmetry and limits") {
    // equal aligned rates pin theta_p at 45 degrees exactly
    auto sym = pump_params(40.0, 40.0, 25.0, 0.5, 0.5);
    CHECK(sym.theta_p_deg == doctest::Approx(45.0));

    auto clean = pump_params(40.0, 40.0, 25.0, 0.0, 0.0);
    CHECK(clean.d_background == doctest::Approx(0.0));
    CHECK(clean.n0 == doctest::Approx(80.0));

    CHECK_THROWS_AS(pump_params(40.0, 40.0, 60.0, 0.0, 0.0), DomainError);  // |cos| > 1
}

TEST_CASE("pump parameters invert their own forward model exactly") {
    // forward convention under which the inversion formulas are exact:
    // N(0,0) = D + N0 cos^2, N(90,90) = D + N0 sin^2, N(0,90) = N(90,0) = D,
    // N(45,45) = (N0/4)(1 + sin(2 theta) cos(phi)).
    const double d = 0.4, n0 = 120.0, theta = 38.5, phi = 52.0;
    double c = std::cos(deg2rad(theta)), s = std::sin(deg2rad(theta));
    double n00 = d + n0 * c * c;
    double n9090 = d + n0 * s * s;
    double n4545 = 0.25 * n0 * (1.0 + std::sin(deg2rad(2 * theta)) * std::cos(deg2rad(phi)));
    auto fit = pump_params(n00, n9090, n4545, d, d);
    CHECK(fit.d_background == doctest::Approx(d).epsilon(1e-12));
    CHECK(fit.n0 == doctest::Approx(n0).epsilon(1e-12));
    CHECK(fit.theta_p_deg == doctest::Approx(theta).epsilon(1e-9));
    CHECK(fit.phi_m_deg == doctest::Approx(phi).epsilon(1e-9));
}

TEST_CASE("detector efficiency") {
    auto e = detector_efficiency(26.7, 100.0);
    CHECK(e.eta == doctest::Approx(0.267));
    CHECK(e.within_unit);
    CHECK(detector_efficiency(0.0, 100.0).eta == doctest::Approx(0.0));
    CHECK(detector_efficiency(100.0, 100.0).eta == doctest::Approx(1.0));
    CHECK(!detector_efficiency(120.0, 100.0).within_unit);
    CHECK_THROWS_AS(detector_efficiency(1.0, 0.0), DomainError);
}

TEST_CASE("power fit") {
    std::vector<PowerPoint> line;
    for (double p : {1.0, 2.0, 5.0, 8.0}) line.push_back({p, 3.0 * p});
    auto fit = power_fit(line);
    CHECK(fit.slope_alpha == doctest::Approx(3.0));
    CHECK(fit.intercept == doctest::Approx(0.0));
    CHECK(fit.residual_rms == doctest::Approx(0.0));

    std::vector<PowerPoint> flat = {{1, 7}, {2, 7}, {3, 7}};
    CHECK(power_fit(flat).slope_alpha == doctest::Approx(0.0));

    std::vector<PowerPoint> degenerate = {{1, 5}, {1, 6}};
    CHECK_THROWS_AS(power_fit(degenerate), DegenerateInputError);
}

TEST_CASE("power fit recovers a noisy slope") {
    std::mt19937_64 rng(81);
    const double alpha = 4.2, t_int = 10.0;
    std::vector<PowerPoint> points;
    double fisher = 0.0, px_mean = 0.0, n = 0.0;
    for (double p = 5.0; p <= 80.0; p += 5.0) {
        std::poisson_distribution<long long> poisson(alpha * p * t_int);
        points.push_back({p, static_cast<double>(poisson(rng)) / t_int});
        px_mean += p;
        n += 1.0;
    }
    px_mean /= n;
    for (const auto& q : points) fisher += (q.power - px_mean) * (q.power - px_mean);
    auto fit = power_fit(points);
    // crude 3-sigma band from the mean count noise
    double sigma_y = std::sqrt(alpha * 40.0 * t_int) / t_int;
    double sigma_slope = sigma_y / std::sqrt(fisher);
    CHECK(std::abs(fit.slope_alpha - alpha) < 3.0 * sigma_slope + 0.05);
}

TEST_CASE("effective susceptibility scaling and round trip") {
    CrystalParams c;
    c.length_m = 0.5e-3;
    c.area_m2 = 7e-6;
    c.n_pump = 1.66;
    c.n_spdc = 1.66;
    c.omega_p = 2 * kPi * 2.998e8 / 405e-9;
    c.pulse_duty = 1.0;

    double chi = chi2_effective(100.0, c);
    CHECK(chi > 0.0);

    CrystalParams doubled = c;
    doubled.length_m = 2 * c.length_m;
    CHECK(chi2_effective(100.0, doubled) == doctest::Approx(chi / 2.0).epsilon(1e-12));
    CHECK(chi2_effective(400.0, c) == doctest::Approx(2.0 * chi).epsilon(1e-12));

    // forward: alpha(chi) = duty (w/3pi) (L^2/A) / P0(chi); then invert
    constexpr double eps0 = 8.8541878128e-12, c_light = 2.99792458e8;
    double w_s = c.omega_p / 2.0;
    double p0 = 8.0 * eps0 * c.n_pump * c.n_pump * c.n_spdc * std::pow(c_light, 3) /
                (w_s * w_s * chi * chi);
    double alpha = c.pulse_duty * (c.omega_p / (3.0 * kPi)) *
                   (c.length_m * c.length_m / c.area_m2) / p0;
    CHECK(chi2_effective(alpha, c) == doctest::Approx(chi).epsilon(1e-12));

    CHECK_THROWS_AS(chi2_effective(-1.0, c), DomainError);
}
