#pragma once

// Derivative-free Nelder-Mead simplex minimizer with restarts, sized for
// the 16-parameter likelihood surfaces in this project.

#include <functional>
#include <vector>

namespace qst {

struct SimplexOptions {
    int max_evals = 50000;
    double rel_tol = 1e-10;      // relative spread of simplex values
    double abs_tol = 1e-12;      // absolute spread floor (noiseless optima sit at 0)
    double initial_step = 0.05;  // per-coordinate displacement of the start simplex
    int restarts = 2;            // rebuild the simplex around the incumbent
};

struct SimplexResult {
    std::vector<double> x;
    double fval = 0.0;
    int evaluations = 0;
    bool converged = false;
};

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const SimplexOptions& opt = {});

}  // namespace qst
