#include "qst/measures.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "qst/errors.hpp"
#include "qst/qmatrix.hpp"

namespace qst {

namespace {

// Clamped eigenvalues of a nominally physical state, descending.
Eigen::Vector4d state_spectrum(const Mat4& rho) {
    auto f = physicality(rho, 1e-6);
    if (!f.hermitian || !f.unit_trace || f.min_eigenvalue < -kMeasureEigTol) {
        throw NonPhysicalStateError("measures: input is not a physical density matrix");
    }
    Eigen::Vector4d ev = herm_eig(rho, 1e-6).values;
    for (int i = 0; i < 4; ++i) ev(i) = std::max(ev(i), 0.0);
    return ev;
}

double entropy_bits(const Eigen::Vector4d& p) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (p(i) > kEigClampTol) s -= p(i) * std::log2(p(i));
    }
    return s;
}

}  // namespace

double von_neumann(const Mat4& rho) { return entropy_bits(state_spectrum(rho)); }

double purity(const Mat4& rho) {
    state_spectrum(rho);  // physicality gate
    return (rho * rho).trace().real();
}

double linear_entropy(const Mat4& rho) { return (4.0 / 3.0) * (1.0 - purity(rho)); }

double concurrence(const Mat4& rho) {
    state_spectrum(rho);
    const Mat4& sf = spin_flip();
    Mat4 sq = psd_sqrt(rho, kMeasureEigTol);
    Mat4 r2 = sq * (sf * rho.conjugate() * sf) * sq;
    // R = sqrt(r2); its eigenvalues are the square roots of r2's spectrum.
    Eigen::Vector4d w = herm_eig(Mat4((r2 + r2.adjoint()) / 2.0), 1e-6).values;
    Eigen::Vector4d r;
    for (int i = 0; i < 4; ++i) r(i) = std::sqrt(std::max(w(i), 0.0));
    return std::max(0.0, r(0) - r(1) - r(2) - r(3));
}

std::pair<double, double> tangle_and_eof(double c) {
    if (c < 0.0 || c > 1.0) {
        throw DomainError("tangle_and_eof: concurrence must lie in [0, 1]");
    }
    double tangle = c * c;
    double x = (1.0 + std::sqrt(1.0 - tangle)) / 2.0;
    double eof = 0.0;
    if (x > 0.0 && x < 1.0) {
        eof = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    }
    return {tangle, eof};
}

double renyi2(const Mat4& rho, Subsystem subsystem) {
    state_spectrum(rho);
    Mat2 sub = partial_trace(rho, subsystem);
    return -std::log((sub * sub).trace().real());
}

double log_negativity(const Mat4& rho) {
    state_spectrum(rho);
    return std::log2(trace_norm(partial_transpose(rho, Subsystem::A)));
}

MeasuresReport measures_of(const Mat4& rho) {
    MeasuresReport rep;
    rep.von_neumann.value = von_neumann(rho);
    rep.purity.value = purity(rho);
    rep.linear_entropy.value = (4.0 / 3.0) * (1.0 - rep.purity.value);
    rep.renyi2_a.value = renyi2(rho, Subsystem::A);
    rep.concurrence.value = concurrence(rho);
    auto [tangle, eof] = tangle_and_eof(rep.concurrence.value);
    rep.tangle.value = tangle;
    rep.eof.value = eof;
    rep.log_negativity.value = log_negativity(rho);
    return rep;
}

MeasuresReport report_with_uncertainty(const TomographyInput& input, int trials,
                                       std::uint64_t seed, const MleOptions& fit_options) {
    if (trials < 2) {
        throw DomainError("report_with_uncertainty: need at least 2 trials");
    }
    MeasuresReport central = measures_of(mle_fit(input, fit_options).rho);
    central.trials_requested = trials;

    std::vector<std::array<double, 8>> samples;
    samples.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        // one independent, trial-indexed stream per resample
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL);
        TomographyInput resampled = input;
        for (auto& rec : resampled.records) {
            double t_int = rec.t_s > 0.0 ? rec.t_s : 1.0;
            double mean = rec.n_c * t_int;
            if (mean > 0.0) {
                std::poisson_distribution<long long> poisson(mean);
                rec.n_c = static_cast<double>(poisson(rng)) / t_int;
            }
        }
        try {
            MleResult fit = mle_fit(resampled, fit_options);
            if (!fit.converged) {
                ++central.trials_dropped;
                continue;
            }
            MeasuresReport m = measures_of(fit.rho);
            samples.push_back({m.von_neumann.value, m.linear_entropy.value, m.purity.value,
                               m.renyi2_a.value, m.concurrence.value, m.tangle.value,
                               m.eof.value, m.log_negativity.value});
        } catch (const Error&) {
            ++central.trials_dropped;
        }
    }

    auto stat_of = [&](int k) {
        double mean = 0.0;
        for (const auto& s : samples) mean += s[k];
        mean /= static_cast<double>(samples.size());
        double var = 0.0;
        for (const auto& s : samples) var += (s[k] - mean) * (s[k] - mean);
        var /= static_cast<double>(samples.size() - 1);
        return std::sqrt(var);
    };

    if (samples.size() >= 2) {
        central.von_neumann.stddev = stat_of(0);
        central.linear_entropy.stddev = stat_of(1);
        central.purity.stddev = stat_of(2);
        central.renyi2_a.stddev = stat_of(3);
        central.concurrence.stddev = stat_of(4);
        central.tangle.stddev = stat_of(5);
        central.eof.stddev = stat_of(6);
        central.log_negativity.stddev = stat_of(7);
    }
    return central;
}

}  // namespace qst
