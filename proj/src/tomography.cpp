#include "qst/tomography.hpp"

#include <cmath>

#include "qst/bell.hpp"
#include "qst/errors.hpp"

namespace qst {

SingleQubitState single_qubit_stokes(double n_total, double n_h, double n_d, double n_r) {
    if (n_total <= 0.0) {
        throw DegenerateInputError("single_qubit_stokes: total count must be positive");
    }
    SingleQubitState out;
    out.stokes.s0 = n_total;
    out.stokes.s1 = 2.0 * n_h - n_total;  // N(P_H - P_V)
    out.stokes.s2 = 2.0 * n_d - n_total;  // N(P_D - P_A)
    out.stokes.s3 = 2.0 * n_r - n_total;  // N(P_R - P_L)
    const auto& s = pauli();
    // H/V along sigma_z, D/A along sigma_x, R/L along -sigma_y
    // (R = (|H> - i|V>)/sqrt2 is the -1 eigenvector of sigma_y).
    out.rho = 0.5 * (s[0] + (out.stokes.s1 / n_total) * s[3] +
                     (out.stokes.s2 / n_total) * s[1] -
                     (out.stokes.s3 / n_total) * s[2]);
    return out;
}

Eigen::Matrix<double, 16, 16> b_matrix(const std::array<ProjectiveSetting, 16>& settings) {
    const auto& gamma = gamma_basis();
    Eigen::Matrix<double, 16, 16> b;
    for (int nu = 0; nu < 16; ++nu) {
        Ket4 psi = two_qubit_projector(settings[nu]);
        for (int mu = 0; mu < 16; ++mu) {
            b(nu, mu) = (psi.adjoint() * gamma[mu] * psi)(0).real();
        }
    }
    if (std::abs(b.determinant()) < 1e-12) {
        throw SingularSetError("b_matrix: tomographic set is incomplete (B singular)");
    }
    return b;
}

std::array<Mat4, 16> m_matrices(const std::array<ProjectiveSetting, 16>& settings) {
    Eigen::Matrix<double, 16, 16> binv = b_matrix(settings).inverse();
    const auto& gamma = gamma_basis();
    std::array<Mat4, 16> m;
    for (int nu = 0; nu < 16; ++nu) {
        m[nu] = Mat4::Zero();
        for (int mu = 0; mu < 16; ++mu) {
            m[nu] += binv(mu, nu) * gamma[mu];
        }
    }
    return m;
}

std::array<double, 16> corrected_rates(const TomographyInput& input,
                                       bool subtract_accidentals) {
    if (input.records.size() != 16) {
        throw DegenerateInputError("tomography input must contain exactly 16 records");
    }
    std::array<double, 16> rates{};
    for (int i = 0; i < 16; ++i) {
        const auto& r = input.records[i];
        if (r.n_c < 0.0 || r.n_a < 0.0 || r.n_b < 0.0) {
            throw DomainError("tomography input: negative rate in record " +
                              std::to_string(i + 1));
        }
        double n = r.n_c;
        if (subtract_accidentals) {
            n = std::max(0.0, n - accidental_rate(r.n_a, r.n_b, r.t_s, r.tau_s));
        }
        rates[i] = n;
    }
    return rates;
}

LinearReconstruction linear_reconstruct(const TomographyInput& input,
                                        bool subtract_accidentals) {
    std::array<ProjectiveSetting, 16> settings;
    for (int i = 0; i < 16; ++i) settings[i] = input.records[i].setting;
    auto rates = corrected_rates(input, subtract_accidentals);
    auto m = m_matrices(settings);

    LinearReconstruction out;
    out.n_norm = rates[0] + rates[1] + rates[2] + rates[3];
    if (out.n_norm <= 0.0) {
        throw DegenerateInputError("linear_reconstruct: basis rows sum to zero");
    }
    Mat4 rho = Mat4::Zero();
    for (int nu = 0; nu < 16; ++nu) rho += m[nu] * rates[nu];
    rho /= out.n_norm;
    out.rho = rho;
    out.eigenvalues = herm_eig(rho, 1e-6).values;
    out.physical = physicality(rho);
    return out;
}

}  // namespace qst
