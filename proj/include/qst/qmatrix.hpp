#pragma once

// Dense complex 2x2 / 4x4 kernels shared by the tomography pipeline:
// Hermitian eigendecomposition, PSD square root, partial trace/transpose,
// trace norm, and the fixed operator bases (Pauli, Gamma, spin flip).

#include <array>

#include "qst/errors.hpp"
#include "qst/types.hpp"

namespace qst {

// Eigenvalues below this magnitude are treated as exact zeros before
// logs and square roots (0*log 0 := 0).
constexpr double kEigClampTol = 1e-9;

template <int N>
struct EigResult {
    Eigen::Matrix<double, N, 1> values;              // sorted descending
    Eigen::Matrix<cplx, N, N> vectors;               // columns match values
};

EigResult<2> herm_eig(const Mat2& m, double tol = kEigClampTol);
EigResult<4> herm_eig(const Mat4& m, double tol = kEigClampTol);

Mat2 psd_sqrt(const Mat2& m, double tol = kEigClampTol);
Mat4 psd_sqrt(const Mat4& m, double tol = kEigClampTol);

Mat2 partial_trace(const Mat4& m, Subsystem keep);
Mat4 partial_transpose(const Mat4& m, Subsystem on);

double trace_norm(const Mat2& m);
double trace_norm(const Mat4& m);

// sigma_0..sigma_3 = I, X, Y, Z
const std::array<Mat2, 4>& pauli();

// Gamma_nu = (1/2) sigma_i (x) sigma_j, nu = 4*i + j (row-major), so that
// tr(Gamma_nu Gamma_mu) = delta_{nu,mu}.
const std::array<Mat4, 16>& gamma_basis();

// Sigma_f = sigma_y (x) sigma_y, antidiagonal (-1, 1, 1, -1).
const Mat4& spin_flip();

Ket4 kron(const Ket2& a, const Ket2& b);
Mat4 kron(const Mat2& a, const Mat2& b);

struct PhysicalityFlags {
    bool hermitian = false;
    bool unit_trace = false;
    bool psd = false;
    bool purity_le_1 = false;
    double min_eigenvalue = 0.0;
    bool all() const { return hermitian && unit_trace && psd && purity_le_1; }
};

PhysicalityFlags physicality(const Mat4& rho, double tol = 1e-9);

// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 and trace distance
// (1/2)||a - b||_1 between density matrices.
double fidelity(const Mat4& a, const Mat4& b);
double trace_distance(const Mat4& a, const Mat4& b);

}  // namespace qst
