#include "qst/mle.hpp"

#include <cmath>
#include <vector>

#include "qst/errors.hpp"
#include "qst/optim.hpp"

namespace qst {

namespace {

Mat4 f_matrix(const CholeskyParams& p) {
    const auto& z = p.z;
    Mat4 f = Mat4::Zero();
    f(0, 0) = z[0];
    f(1, 1) = z[1];
    f(2, 2) = z[2];
    f(3, 3) = z[3];
    f(1, 0) = cplx(z[4], z[5]);
    f(2, 1) = cplx(z[6], z[7]);
    f(3, 2) = cplx(z[8], z[9]);
    f(2, 0) = cplx(z[10], z[11]);
    f(3, 1) = cplx(z[12], z[13]);
    f(3, 0) = cplx(z[14], z[15]);
    return f;
}

void pack(const Mat4& f, CholeskyParams& p) {
    auto& z = p.z;
    z[0] = f(0, 0).real();
    z[1] = f(1, 1).real();
    z[2] = f(2, 2).real();
    z[3] = f(3, 3).real();
    z[4] = f(1, 0).real();  z[5] = f(1, 0).imag();
    z[6] = f(2, 1).real();  z[7] = f(2, 1).imag();
    z[8] = f(3, 2).real();  z[9] = f(3, 2).imag();
    z[10] = f(2, 0).real(); z[11] = f(2, 0).imag();
    z[12] = f(3, 1).real(); z[13] = f(3, 1).imag();
    z[14] = f(3, 0).real(); z[15] = f(3, 0).imag();
}

// sqrt that continues into the complex plane for negative arguments;
// the real part is what survives into the parameter vector.
cplx csqrt(const cplx& v) { return std::sqrt(v); }

struct Projectors {
    std::array<Mat4, 16> ops;
};

Projectors projectors_of(const TomographyInput& input) {
    Projectors p;
    for (int nu = 0; nu < 16; ++nu) {
        Ket4 psi = two_qubit_projector(input.records[nu].setting);
        p.ops[nu] = psi * psi.adjoint();
    }
    return p;
}

double expectation(const Mat4& op, const Mat4& rho) {
    return (op * rho).trace().real();
}

}  // namespace

Mat4 rho_from_params(const CholeskyParams& p) {
    double norm2 = 0.0;
    for (double v : p.z) norm2 += v * v;
    if (norm2 <= 0.0) {
        throw ZeroParamsError("rho_from_params: all parameters are zero");
    }
    Mat4 f = f_matrix(p);
    Mat4 a = f.adjoint() * f;
    return a / a.trace().real();
}

CholeskyParams params_from_rho(const Mat4& rho) {
    const double tol = 1e-12;
    Mat4 f = Mat4::Zero();

    cplx f33 = csqrt(rho(3, 3));
    if (std::abs(f33) < tol) {
        throw DegenerateMinorError("params_from_rho: rho44 vanishes");
    }
    for (int j = 0; j < 3; ++j) f(3, j) = rho(3, j) / f33;
    f(3, 3) = f33;

    cplx f22 = csqrt(rho(2, 2) - std::norm(f(3, 2)));
    if (std::abs(f22) < tol) {
        throw DegenerateMinorError("params_from_rho: second-pivot minor vanishes");
    }
    for (int j = 0; j < 2; ++j) {
        f(2, j) = (rho(2, j) - std::conj(f(3, 2)) * f(3, j)) / std::conj(f22);
    }
    f(2, 2) = f22;

    cplx f11 = csqrt(rho(1, 1) - std::norm(f(2, 1)) - std::norm(f(3, 1)));
    if (std::abs(f11) < tol) {
        throw DegenerateMinorError("params_from_rho: third-pivot minor vanishes");
    }
    f(1, 0) = (rho(1, 0) - std::conj(f(2, 1)) * f(2, 0) - std::conj(f(3, 1)) * f(3, 0)) /
              std::conj(f11);
    f(1, 1) = f11;

    f(0, 0) = csqrt(rho(0, 0) - std::norm(f(1, 0)) - std::norm(f(2, 0)) - std::norm(f(3, 0)));

    CholeskyParams out;
    pack(f, out);  // real parts only; imaginary leakage signals unphysical input
    return out;
}

namespace {

double likelihood_impl(const CholeskyParams& z, const Projectors& proj,
                       const std::array<double, 16>& rates, double n_norm,
                       const std::array<double, 16>& floors) {
    Mat4 rho = rho_from_params(z);
    double total = 0.0;
    for (int nu = 0; nu < 16; ++nu) {
        double pred = n_norm * expectation(proj.ops[nu], rho);
        double denom = std::max(pred, floors[nu]);
        double resid = pred - rates[nu];
        total += resid * resid / (2.0 * denom);
    }
    return total;
}

std::array<double, 16> denominator_floors(const TomographyInput& input) {
    // half a count per acquisition, expressed as a rate
    std::array<double, 16> fl{};
    for (int nu = 0; nu < 16; ++nu) {
        double t = input.records[nu].t_s;
        fl[nu] = 0.5 / (t > 0.0 ? t : 1.0);
    }
    return fl;
}

CholeskyParams seed_from_linear(const Mat4& rho_lin) {
    try {
        return params_from_rho(rho_lin);
    } catch (const DegenerateMinorError&) {
        // rank-deficient or boundary estimates: blend in a little identity
        const double eps = 1e-6;
        Mat4 reg = (1.0 - eps) * rho_lin + eps * Mat4::Identity() / 4.0;
        return params_from_rho(reg);
    }
}

}  // namespace

double likelihood(const CholeskyParams& z, const TomographyInput& input,
                  bool subtract_accidentals) {
    auto proj = projectors_of(input);
    auto rates = corrected_rates(input, subtract_accidentals);
    double n_norm = rates[0] + rates[1] + rates[2] + rates[3];
    return likelihood_impl(z, proj, rates, n_norm, denominator_floors(input));
}

MleResult mle_fit(const TomographyInput& input, const MleOptions& options) {
    auto proj = projectors_of(input);
    auto rates = corrected_rates(input, options.subtract_accidentals);
    double n_norm = rates[0] + rates[1] + rates[2] + rates[3];
    if (n_norm <= 0.0) {
        throw DegenerateInputError("mle_fit: basis rows sum to zero");
    }
    auto floors = denominator_floors(input);

    CholeskyParams seed;
    if (options.seed_override) {
        seed = *options.seed_override;
    } else {
        auto lin = linear_reconstruct(input, options.subtract_accidentals);
        seed = seed_from_linear(lin.rho);
    }

    auto objective = [&](const std::vector<double>& x) {
        CholeskyParams p;
        std::copy(x.begin(), x.end(), p.z.begin());
        double norm2 = 0.0;
        for (double v : p.z) norm2 += v * v;
        if (norm2 <= 1e-300) return 1e30;  // keep the optimizer off the zero point
        return likelihood_impl(p, proj, rates, n_norm, floors);
    };

    SimplexOptions sopt;
    sopt.max_evals = options.max_iter;
    sopt.rel_tol = options.tol;
    auto res = nelder_mead(objective, {seed.z.begin(), seed.z.end()}, sopt);

    MleResult out;
    std::copy(res.x.begin(), res.x.end(), out.z_opt.z.begin());
    out.rho = rho_from_params(out.z_opt);
    out.likelihood_value = res.fval;
    out.iterations = res.evaluations;
    out.converged = res.converged;
    out.n_norm = n_norm;
    return out;
}

}  // namespace qst
