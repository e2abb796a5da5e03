#pragma once

// Maximum-likelihood refinement of the linear tomographic estimate:
// 16 real parameters z map through a triangular factor F(z) onto the
// manifold of physical density matrices, fitted to the measured rates
// by a Gaussian likelihood.

#include <array>
#include <optional>

#include "qst/tomography.hpp"
#include "qst/types.hpp"

namespace qst {

struct CholeskyParams {
    std::array<double, 16> z{};
};

struct MleOptions {
    int max_iter = 50000;
    double tol = 1e-10;
    bool subtract_accidentals = true;
    std::optional<CholeskyParams> seed_override;
};

struct MleResult {
    Mat4 rho = Mat4::Zero();
    CholeskyParams z_opt;
    double likelihood_value = 0.0;
    int iterations = 0;
    bool converged = false;
    double n_norm = 0.0;
};

// F(z) is lower triangular with real diagonal (z1..z4); rho = F'F / tr(F'F)
// is Hermitian, PSD and unit trace for any nonzero z.
Mat4 rho_from_params(const CholeskyParams& z);

// Inverse map solving rho = F'F by back-substitution; for non-PSD input the
// deduced entries go complex and their real parts are kept. Throws
// DegenerateMinor when rho44 or a pivot falls below 1e-12 in magnitude.
CholeskyParams params_from_rho(const Mat4& rho);

// L(z) = sum_nu [N <psi|rho(z)|psi> - n_nu]^2 / (2 N <psi|rho(z)|psi>)
// with N = n1+n2+n3+n4 of the data and the denominator floored at half a
// count per acquisition.
double likelihood(const CholeskyParams& z, const TomographyInput& input,
                  bool subtract_accidentals = true);

MleResult mle_fit(const TomographyInput& input, const MleOptions& options = {});

}  // namespace qst
