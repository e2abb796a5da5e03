#pragma once

// Linear tomographic reconstruction: single-qubit Stokes analysis and the
// 16-measurement two-qubit inversion through the Gamma/B/M machinery.

#include <array>
#include <string>
#include <vector>

#include "qst/polarization.hpp"
#include "qst/qmatrix.hpp"
#include "qst/types.hpp"

namespace qst {

struct CountRecord {
    int nu = 0;                // 1-based measurement index
    std::string label;         // e.g. "HH"
    ProjectiveSetting setting;
    double n_a = 0.0;          // singles, cps
    double n_b = 0.0;
    double n_c = 0.0;          // coincidences, cps
    double t_s = 1.0;          // acquisition time
    double tau_s = 0.0;        // coincidence window
};

struct TomographyInput {
    std::vector<CountRecord> records;  // exactly 16, in nu order
};

struct StokesVector {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

struct LinearReconstruction {
    Mat4 rho = Mat4::Zero();
    double n_norm = 0.0;                  // N = n1+n2+n3+n4
    Eigen::Vector4d eigenvalues;          // descending
    PhysicalityFlags physical;
};

// Stokes analysis of one beam from (total, H, D, R)-projected counts.
// Convention: S0=N, S1=N(P_H-P_V), S2=N(P_D-P_A), S3=N(P_R-P_L).
struct SingleQubitState {
    StokesVector stokes;
    Mat2 rho;
};
SingleQubitState single_qubit_stokes(double n_total, double n_h, double n_d, double n_r);

// B_{nu,mu} = <psi_nu| Gamma_mu |psi_nu>; throws SingularSet when the
// settings are tomographically incomplete.
Eigen::Matrix<double, 16, 16> b_matrix(const std::array<ProjectiveSetting, 16>& settings);

// M_nu = sum_mu (B^-1)_{mu,nu} Gamma_mu, satisfying sum_nu M_nu = I and,
// for the standard set, tr(M_nu) = 1 for nu=1..4 and 0 otherwise.
std::array<Mat4, 16> m_matrices(const std::array<ProjectiveSetting, 16>& settings);

// rho = sum_nu M_nu n_nu / N with N = n1+n2+n3+n4. Unit trace by
// construction; physicality is reported, not enforced. When
// subtract_accidentals is set, tau*Na*Nb/T is removed from each rate
// first (clamped at zero).
LinearReconstruction linear_reconstruct(const TomographyInput& input,
                                        bool subtract_accidentals = true);

// The accidental-corrected rate vector used by linear_reconstruct and mle.
std::array<double, 16> corrected_rates(const TomographyInput& input,
                                       bool subtract_accidentals);

}  // namespace qst
