#include "qst/polarization.hpp"

#include <cmath>

#include "qst/qmatrix.hpp"

namespace qst {

Ket2 projector_state(double h_deg, double q_deg) {
    const double h = deg2rad(h_deg);
    const double q = deg2rad(q_deg);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Ket2 psi;
    psi(0) = inv_sqrt2 * cplx(std::sin(2 * h), std::sin(2 * (h - q)));
    psi(1) = inv_sqrt2 * cplx(std::cos(2 * h), -std::cos(2 * (h - q)));
    return psi;
}

Ket4 two_qubit_projector(const ProjectiveSetting& s) {
    return kron(projector_state(s.h_a, s.q_a), projector_state(s.h_b, s.q_b));
}

const std::array<ProjectiveSetting, 16>& standard_settings() {
    static const std::array<ProjectiveSetting, 16> set = {{
        {45, 0, 45, 0},       // HH
        {45, 0, 0, 0},        // HV
        {0, 0, 0, 0},         // VV
        {0, 0, 45, 0},        // VH
        {22.5, 0, 45, 0},     // RH
        {22.5, 0, 0, 0},      // RV
        {22.5, 45, 0, 0},     // DV
        {22.5, 45, 45, 0},    // DH
        {22.5, 45, 22.5, 0},  // DR
        {22.5, 45, 22.5, 45}, // DD
        {22.5, 0, 22.5, 45},  // RD
        {45, 0, 22.5, 45},    // HD
        {0, 0, 22.5, 45},     // VD
        {0, 0, 22.5, 90},     // VL
        {45, 0, 22.5, 90},    // HL
        {22.5, 0, 22.5, 90},  // RL
    }};
    return set;
}

const std::array<std::string, 16>& standard_labels() {
    static const std::array<std::string, 16> labels = {
        "HH", "HV", "VV", "VH", "RH", "RV", "DV", "DH",
        "DR", "DD", "RD", "HD", "VD", "VL", "HL", "RL"};
    return labels;
}

}  // namespace qst
