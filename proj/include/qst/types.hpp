#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qst {

using cplx = std::complex<double>;

// Two-level (single polarization qubit) and four-level (photon pair) objects.
// Basis ordering of the 4-dim space is |HH>, |HV>, |VH>, |VV>.
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Ket2 = Eigen::Vector2cd;
using Ket4 = Eigen::Vector4cd;

// One photon of the pair. Marginals follow the row-label convention of the
// 4x4 matrices: the A marginal is [[r11+r33, r12+r34], [c.c., r22+r44]].
enum class Subsystem { A, B };

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace qst
