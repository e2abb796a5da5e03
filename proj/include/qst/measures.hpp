#pragma once

// Entanglement and entropy scalars of a two-qubit density matrix, plus
// Monte-Carlo uncertainty propagation over Poisson-resampled counts.

#include <cstdint>
#include <optional>

#include "qst/mle.hpp"
#include "qst/types.hpp"

namespace qst {

struct MeasureStats {
    double value = 0.0;
    std::optional<double> stddev;
};

struct MeasuresReport {
    MeasureStats von_neumann;     // bits
    MeasureStats linear_entropy;  // [0,1]
    MeasureStats purity;          // tr rho^2
    MeasureStats renyi2_a;        // nats
    MeasureStats concurrence;
    MeasureStats tangle;
    MeasureStats eof;
    MeasureStats log_negativity;
    int trials_requested = 0;
    int trials_dropped = 0;
};

// Inputs must be Hermitian with unit trace; eigenvalue dips down to
// -kMeasureEigTol (rounded published matrices) are clamped to zero, anything
// worse raises NonPhysicalState. MLE outputs pass strictly.
constexpr double kMeasureEigTol = 1e-2;

double von_neumann(const Mat4& rho);           // -sum p log2 p
double linear_entropy(const Mat4& rho);        // (4/3)(1 - tr rho^2)
double purity(const Mat4& rho);                // tr rho^2
double concurrence(const Mat4& rho);           // max{0, r1-r2-r3-r4}
std::pair<double, double> tangle_and_eof(double concurrence_value);
double renyi2(const Mat4& rho, Subsystem subsystem);  // -ln tr rho_sub^2
double log_negativity(const Mat4& rho);        // log2 || rho^T_A ||_1

MeasuresReport measures_of(const Mat4& rho);

// Poisson-resamples the coincidence rates (on integrated counts), re-fits
// each trial with mle_fit, and reports per-measure mean and sample std-dev.
// Deterministic for a fixed seed; trials that fail to converge are dropped
// and counted.
MeasuresReport report_with_uncertainty(const TomographyInput& input, int trials,
                                       std::uint64_t seed,
                                       const MleOptions& fit_options = {});

}  // namespace qst
