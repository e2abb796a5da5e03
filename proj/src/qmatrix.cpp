#include "qst/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace qst {

namespace {

template <typename Mat>
double max_antihermitian_entry(const Mat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Mat, int N>
EigResult<N> herm_eig_impl(const Mat& m, double tol) {
    if (max_antihermitian_entry(m) > tol) {
        throw NonHermitianError("herm_eig: matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Mat> solver((m + m.adjoint()) / 2.0);
    EigResult<N> out;
    // Eigen sorts ascending; flip to descending.
    for (int i = 0; i < N; ++i) {
        out.values(i) = solver.eigenvalues()(N - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(N - 1 - i);
    }
    return out;
}

template <typename Mat, int N>
Mat psd_sqrt_impl(const Mat& m, double tol) {
    auto eig = herm_eig_impl<Mat, N>(m, tol);
    Mat out = Mat::Zero();
    for (int i = 0; i < N; ++i) {
        double lam = eig.values(i);
        if (lam < -tol) {
            throw NegativeEigenvalueError("psd_sqrt: eigenvalue below -tolerance");
        }
        lam = std::max(lam, 0.0);
        out += std::sqrt(lam) * eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    }
    return out;
}

}  // namespace

EigResult<2> herm_eig(const Mat2& m, double tol) { return herm_eig_impl<Mat2, 2>(m, tol); }
EigResult<4> herm_eig(const Mat4& m, double tol) { return herm_eig_impl<Mat4, 4>(m, tol); }

Mat2 psd_sqrt(const Mat2& m, double tol) { return psd_sqrt_impl<Mat2, 2>(m, tol); }
Mat4 psd_sqrt(const Mat4& m, double tol) { return psd_sqrt_impl<Mat4, 4>(m, tol); }

Mat2 partial_trace(const Mat4& m, Subsystem keep) {
    Mat2 out;
    if (keep == Subsystem::A) {
        // A marginal in the row-label convention: sum over the first letter.
        out << m(0, 0) + m(2, 2), m(0, 1) + m(2, 3),
               m(1, 0) + m(3, 2), m(1, 1) + m(3, 3);
    } else {
        out << m(0, 0) + m(1, 1), m(0, 2) + m(1, 3),
               m(2, 0) + m(3, 1), m(2, 2) + m(3, 3);
    }
    return out;
}

Mat4 partial_transpose(const Mat4& m, Subsystem on) {
    // Index (f, s) -> 2*f + s with f the first and s the second ket letter.
    // Subsystem::A is the second letter (see partial_trace), B the first.
    Mat4 out;
    for (int f = 0; f < 2; ++f)
        for (int s = 0; s < 2; ++s)
            for (int fp = 0; fp < 2; ++fp)
                for (int sp = 0; sp < 2; ++sp) {
                    int r = 2 * f + s, c = 2 * fp + sp;
                    int rt = (on == Subsystem::A) ? 2 * f + sp : 2 * fp + s;
                    int ct = (on == Subsystem::A) ? 2 * fp + s : 2 * f + sp;
                    out(rt, ct) = m(r, c);
                }
    return out;
}

namespace {

template <typename Mat>
double trace_norm_impl(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().sum();
}

}  // namespace

double trace_norm(const Mat2& m) { return trace_norm_impl<Mat2>(m); }
double trace_norm(const Mat4& m) { return trace_norm_impl<Mat4>(m); }

const std::array<Mat2, 4>& pauli() {
    static const std::array<Mat2, 4> sigma = [] {
        std::array<Mat2, 4> s;
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, cplx(0, -1), cplx(0, 1), 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    return sigma;
}

const std::array<Mat4, 16>& gamma_basis() {
    static const std::array<Mat4, 16> gamma = [] {
        std::array<Mat4, 16> g;
        const auto& s = pauli();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                g[4 * i + j] = 0.5 * kron(s[i], s[j]);
        return g;
    }();
    return gamma;
}

const Mat4& spin_flip() {
    static const Mat4 sf = kron(pauli()[2], pauli()[2]);
    return sf;
}

Ket4 kron(const Ket2& a, const Ket2& b) {
    Ket4 out;
    out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

PhysicalityFlags physicality(const Mat4& rho, double tol) {
    PhysicalityFlags f;
    f.hermitian = max_antihermitian_entry(rho) <= tol;
    f.unit_trace = std::abs(rho.trace() - cplx(1.0, 0.0)) <= tol;
    Eigen::SelfAdjointEigenSolver<Mat4> solver((rho + rho.adjoint()) / 2.0);
    f.min_eigenvalue = solver.eigenvalues().minCoeff();
    f.psd = f.min_eigenvalue >= -tol;
    f.purity_le_1 = (rho * rho).trace().real() <= 1.0 + tol;
    return f;
}

double fidelity(const Mat4& a, const Mat4& b) {
    Mat4 sa = psd_sqrt(a, 1e-6);
    Mat4 inner = sa * b * sa;
    // inner is PSD up to rounding; clamp when taking the square root.
    Eigen::SelfAdjointEigenSolver<Mat4> solver((inner + inner.adjoint()) / 2.0);
    double tr = 0.0;
    for (int i = 0; i < 4; ++i) tr += std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
    return tr * tr;
}

double trace_distance(const Mat4& a, const Mat4& b) {
    return 0.5 * trace_norm(Mat4(a - b));
}

}  // namespace qst
