#include "qst/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qst {

namespace {

struct Simplex {
    std::vector<std::vector<double>> pts;
    std::vector<double> vals;

    void sort() {
        std::vector<size_t> idx(vals.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p;
        std::vector<double> v;
        for (size_t i : idx) {
            p.push_back(std::move(pts[i]));
            v.push_back(vals[i]);
        }
        pts = std::move(p);
        vals = std::move(v);
    }
};

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const SimplexOptions& opt) {
    const size_t n = x0.size();
    const double alpha = 1.0, gamma = 2.0, beta = 0.5, delta = 0.5;

    SimplexResult result;
    result.x = x0;
    result.fval = f(x0);
    result.evaluations = 1;

    for (int round = 0; round <= opt.restarts; ++round) {
        Simplex s;
        s.pts.push_back(result.x);
        s.vals.push_back(result.fval);
        for (size_t i = 0; i < n; ++i) {
            auto p = result.x;
            double step = opt.initial_step * std::max(1.0, std::abs(p[i]));
            p[i] += step / (round + 1);  // shrink restart simplices
            s.pts.push_back(p);
            s.vals.push_back(f(p));
            ++result.evaluations;
        }
        s.sort();

        bool converged = false;
        while (result.evaluations < opt.max_evals) {
            double spread = std::abs(s.vals.back() - s.vals.front());
            double scale = std::abs(s.vals.front()) + std::abs(s.vals.back()) + 1e-30;
            if (spread <= std::max(opt.rel_tol * scale, opt.abs_tol)) {
                converged = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (size_t i = 0; i < n; ++i) {
                for (size_t j = 0; j < n; ++j) centroid[j] += s.pts[i][j];
            }
            for (auto& c : centroid) c /= static_cast<double>(n);

            auto blend = [&](double t) {
                std::vector<double> p(n);
                for (size_t j = 0; j < n; ++j)
                    p[j] = centroid[j] + t * (centroid[j] - s.pts[n][j]);
                return p;
            };

            auto xr = blend(alpha);
            double fr = f(xr);
            ++result.evaluations;

            if (fr < s.vals[0]) {
                auto xe = blend(gamma);
                double fe = f(xe);
                ++result.evaluations;
                if (fe < fr) {
                    s.pts[n] = std::move(xe);
                    s.vals[n] = fe;
                } else {
                    s.pts[n] = std::move(xr);
                    s.vals[n] = fr;
                }
            } else if (fr < s.vals[n - 1]) {
                s.pts[n] = std::move(xr);
                s.vals[n] = fr;
            } else {
                auto xc = blend(fr < s.vals[n] ? beta : -beta);
                double fc = f(xc);
                ++result.evaluations;
                if (fc < std::min(fr, s.vals[n])) {
                    s.pts[n] = std::move(xc);
                    s.vals[n] = fc;
                } else {
                    // shrink toward the best vertex
                    for (size_t i = 1; i <= n; ++i) {
                        for (size_t j = 0; j < n; ++j)
                            s.pts[i][j] = s.pts[0][j] + delta * (s.pts[i][j] - s.pts[0][j]);
                        s.vals[i] = f(s.pts[i]);
                        ++result.evaluations;
                    }
                }
            }
            s.sort();
        }

        if (s.vals[0] <= result.fval) {
            result.x = s.pts[0];
            result.fval = s.vals[0];
        }
        result.converged = converged;
        if (!converged) break;  // evaluation budget exhausted
    }
    return result;
}

}  // namespace qst
