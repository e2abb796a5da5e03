#include <doctest.h>

#include <cmath>
#include <random>

#include "qst/bell.hpp"
#include "qst/errors.hpp"
#include "qst/simulator.hpp"
#include "test_util.hpp"

using namespace qst;
using testutil::bell_phi_plus;

TEST_CASE("spdc_state limits") {
    Mat4 bell = spdc_state({45, 0});
    CHECK(bell(0, 0).real() == doctest::Approx(0.5));
    CHECK(bell(0, 3).real() == doctest::Approx(0.5));
    CHECK(bell(3, 0).real() == doctest::Approx(0.5));
    CHECK(bell(3, 3).real() == doctest::Approx(0.5));
    CHECK(bell.trace().real() == doctest::Approx(1.0));
    CHECK(herm_eig(bell).values(0) == doctest::Approx(1.0));  // rank 1

    Mat4 hh = spdc_state({0, 0});
    CHECK(hh(0, 0).real() == doctest::Approx(1.0));

    Mat4 tuned = spdc_state({45.25, 37.62});
    CHECK(tuned.trace().real() == doctest::Approx(1.0));
    CHECK(std::arg(tuned(3, 0)) == doctest::Approx(deg2rad(37.62)));
}

TEST_CASE("quantum coincidence probability") {
    PumpState bell{45, 0};
    CHECK(quantum_pvv(0, 0, bell) == doctest::Approx(0.5));
    CHECK(quantum_pvv(0, 90, bell) == doctest::Approx(0.0));
    CHECK(quantum_pvv(0, 45, bell) == doctest::Approx(0.25));
    // only the relative angle matters for the Bell state
    CHECK(quantum_pvv(13.0, 13.0 + 30.0, bell) ==
          doctest::Approx(0.5 * std::pow(std::cos(deg2rad(30)), 2)));
}

TEST_CASE("the four outcome probabilities sum to one") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(-180.0, 180.0);
    for (int k = 0; k < 10000; ++k) {
        PumpState p{angle(rng), angle(rng)};
        double a = angle(rng), b = angle(rng);
        double sum = 0.0;
        for (Outcome oa : {Outcome::H, Outcome::V})
            for (Outcome ob : {Outcome::H, Outcome::V})
                sum += quantum_outcome_probability(oa, ob, a, b, p);
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("quantum probability agrees with the projector route") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> angle(-90.0, 90.0);
    for (int k = 0; k < 200; ++k) {
        PumpState p{angle(rng), angle(rng)};
        double a = angle(rng), b = angle(rng);
        Mat4 rho = spdc_state(p);
        Ket2 va, vb;
        va << std::sin(deg2rad(a)), std::cos(deg2rad(a));
        vb << std::sin(deg2rad(b)), std::cos(deg2rad(b));
        Ket4 proj = kron(va, vb);
        double via_rho = (proj.adjoint() * rho * proj)(0).real();
        CHECK(quantum_pvv(a, b, p) == doctest::Approx(via_rho).epsilon(1e-12));
    }
}

TEST_CASE("hidden-variable coincidence probability") {
    CHECK(hvt_pvv(17.0, 17.0) == doctest::Approx(0.5));
    CHECK(hvt_pvv(0, 90) == doctest::Approx(0.0));
    CHECK(hvt_pvv(0, 45) == doctest::Approx(0.25));
    // fold outside [0, 90]
    CHECK(hvt_pvv(0, 135) == doctest::Approx(0.25));
    CHECK(hvt_pvv(0, 181) == doctest::Approx(0.5 - deg2rad(1) / kPi));
    // agreement with the quantum value at 0, 45, 90 degrees relative angle
    PumpState bell{45, 0};
    for (double d : {0.0, 45.0, 90.0}) {
        CHECK(hvt_pvv(0, d) == doctest::Approx(quantum_pvv(0, d, bell)));
    }
}

TEST_CASE("predict_counts") {
    Mat4 hh = Mat4::Zero();
    hh(0, 0) = 1.0;
    DetectorModel d;
    d.n_flux = 100.0;
    CHECK(predict_counts(hh, {45, 0, 45, 0}, d) == doctest::Approx(100.0));
    CHECK(predict_counts(hh, {0, 0, 0, 0}, d) == doctest::Approx(0.0));

    Ket4 phi = bell_phi_plus();
    DetectorModel d2;
    d2.n_flux = 64.0;
    CHECK(predict_counts(Mat4(phi * phi.adjoint()), {22.5, 45, 22.5, 45}, d2) ==
          doctest::Approx(32.0));

    // accidentals add on top
    DetectorModel d3;
    d3.n_flux = 0.0;
    d3.singles_a = 1000;
    d3.singles_b = 2000;
    d3.window_tau = 1e-6;
    d3.integration_t = 2.0;
    CHECK(predict_counts(hh, {0, 0, 0, 0}, d3) == doctest::Approx(1e-6 * 1000 * 2000 / 2.0));

    Mat4 unphysical = Mat4::Identity();  // trace 4
    CHECK_THROWS_AS(predict_counts(unphysical, {0, 0, 0, 0}, d), NonPhysicalStateError);
}

TEST_CASE("sample_counts determinism and large-flux limit") {
    Ket4 phi = bell_phi_plus();
    Mat4 rho = phi * phi.adjoint();
    DetectorModel d;
    d.n_flux = 1e8;
    d.integration_t = 1.0;
    auto first = sample_counts(rho, standard_settings(), d, 42);
    auto second = sample_counts(rho, standard_settings(), d, 42);
    REQUIRE(first.size() == 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(first[i].n_c == second[i].n_c);
        double expect = predict_counts(rho, standard_settings()[i], d);
        if (expect > 1e6) {
            CHECK(std::abs(first[i].n_c - expect) / expect < 1e-3);
        }
    }
    auto other = sample_counts(rho, standard_settings(), d, 43);
    bool any_diff = false;
    for (int i = 0; i < 16; ++i) any_diff |= (other[i].n_c != first[i].n_c);
    CHECK(any_diff);
}

TEST_CASE("pair weights") {
    auto vac = pair_weights(0.0, 5);
    CHECK(vac.weights[0] == doctest::Approx(1.0));
    CHECK(vac.weights[1] == doctest::Approx(0.0));

    auto small = pair_weights(0.01, 5);
    CHECK(small.weights[1] / small.weights[0] == doctest::Approx(0.02));

    auto q1 = pair_weights(0.1, 10);
    double sum = 0.0;
    for (size_t n = 1; n < q1.weights.size(); ++n) {
        CHECK(q1.weights[n] < q1.weights[n - 1]);
        sum += q1.weights[n];
    }
    CHECK(sum + q1.weights[0] == doctest::Approx(1.0));

    CHECK_THROWS_AS(pair_weights(1.0, 5), DomainError);
}

TEST_CASE("marginal probability of one arm") {
    Ket4 phi = bell_phi_plus();
    Mat4 bell = phi * phi.adjoint();
    double lo = 1.0, hi = 0.0;
    for (int k = 0; k <= 360; ++k) {
        double p = marginal_probability(bell, Subsystem::A, static_cast<double>(k));
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    CHECK(hi - lo < 1e-12);
    CHECK(lo == doctest::Approx(0.5));

    Mat4 hh = Mat4::Zero();
    hh(0, 0) = 1.0;
    CHECK(marginal_probability(hh, Subsystem::A, 0) == doctest::Approx(0.0));
    CHECK(marginal_probability(hh, Subsystem::A, 90) == doctest::Approx(1.0));
}
