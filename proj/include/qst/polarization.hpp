#pragma once

// Waveplate projector states and the 16 two-qubit tomographic settings.
//
// A projection box is a HWP at angle h followed by a QWP at angle q (fast
// axes measured from vertical, degrees) in front of a V-transmitting
// polarizer. Projector identity is defined up to a global phase.

#include <array>
#include <string>

#include "qst/types.hpp"

namespace qst {

struct ProjectiveSetting {
    double h_a = 0.0;  // degrees
    double q_a = 0.0;
    double h_b = 0.0;
    double q_b = 0.0;
};

// Single-arm projector ket a(h,q)|H> + b(h,q)|V> with
//   a = (1/sqrt2)[sin 2h + i sin 2(h-q)]
//   b = (1/sqrt2)[cos 2h - i cos 2(h-q)]
// so that (45,0)->H, (0,0)->V, (22.5,0)->R, (22.5,45)->D, (22.5,90)->L
// with D=(H+V)/sqrt2, R=(H-iV)/sqrt2, L=(H+iV)/sqrt2.
Ket2 projector_state(double h_deg, double q_deg);

Ket4 two_qubit_projector(const ProjectiveSetting& s);

// The 16 settings of the standard tomographic set, in measurement order
// HH, HV, VV, VH, RH, RV, DV, DH, DR, DD, RD, HD, VD, VL, HL, RL.
const std::array<ProjectiveSetting, 16>& standard_settings();
const std::array<std::string, 16>& standard_labels();

}  // namespace qst
