#include <doctest.h>

#include <cmath>
#include <random>

#include "qst/polarization.hpp"
#include "qst/qmatrix.hpp"
#include "qst/tomography.hpp"

using namespace qst;

namespace {

double overlap(const Ket2& a, const Ket2& b) { return std::abs((a.adjoint() * b)(0)); }

Ket2 ket(cplx h, cplx v) {
    Ket2 k;
    k << h, v;
    return k / k.norm();
}

}  // namespace

TEST_CASE("projector states hit the labeled polarizations up to phase") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(overlap(projector_state(45, 0), ket(1, 0)) == doctest::Approx(1.0));      // H
    CHECK(overlap(projector_state(0, 0), ket(0, 1)) == doctest::Approx(1.0));       // V
    CHECK(overlap(projector_state(22.5, 0), ket(s, cplx(0, -s))) ==
          doctest::Approx(1.0));                                                    // R
    CHECK(overlap(projector_state(22.5, 45), ket(s, s)) == doctest::Approx(1.0));   // D
    CHECK(overlap(projector_state(22.5, 90), ket(s, cplx(0, s))) ==
          doctest::Approx(1.0));                                                    // L
}

TEST_CASE("projector states are normalized and 180-degree periodic") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(-360.0, 360.0);
    for (int k = 0; k < 10000; ++k) {
        double h = angle(rng), q = angle(rng);
        Ket2 psi = projector_state(h, q);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        Ket2 shifted = projector_state(h + 180.0, q + 180.0);
        // same projector: |<psi|psi'>| = 1
        CHECK(overlap(psi, shifted) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("downstream probabilities ignore a global phase") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> angle(0.0, 180.0);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int k = 0; k < 100; ++k) {
        Ket2 psi = projector_state(angle(rng), angle(rng));
        Ket2 rotated = std::polar(1.0, ph(rng)) * psi;
        Ket2 probe = projector_state(angle(rng), angle(rng));
        CHECK(std::norm((probe.adjoint() * psi)(0)) ==
              doctest::Approx(std::norm((probe.adjoint() * rotated)(0))).epsilon(1e-12));
    }
}

TEST_CASE("two-qubit projectors match the standard-set labels") {
    Ket4 hh = two_qubit_projector({45, 0, 45, 0});
    CHECK(std::abs(hh(0)) == doctest::Approx(1.0));

    Ket4 vh = two_qubit_projector({0, 0, 45, 0});
    CHECK(std::abs(vh(2)) == doctest::Approx(1.0));

    Ket4 dd = two_qubit_projector({22.5, 45, 22.5, 45});
    Ket4 target;
    target << 0.5, 0.5, 0.5, 0.5;  // |DD> with D = (H+V)/sqrt2
    CHECK(std::abs((target.adjoint() * dd)(0)) == doctest::Approx(1.0));
}

TEST_CASE("standard settings order and completeness") {
    const auto& set = standard_settings();
    CHECK(set[0].h_a == 45.0);
    CHECK(set[0].q_a == 0.0);
    CHECK(set[0].h_b == 45.0);
    CHECK(set[0].q_b == 0.0);
    CHECK(set[15].h_a == 22.5);
    CHECK(set[15].q_a == 0.0);
    CHECK(set[15].h_b == 22.5);
    CHECK(set[15].q_b == 90.0);
    CHECK(standard_labels()[0] == "HH");
    CHECK(standard_labels()[15] == "RL");
    // the set is tomographically complete: B exists and is nonsingular
    CHECK_NOTHROW(b_matrix(set));
}
