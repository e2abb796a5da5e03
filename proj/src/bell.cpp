#include "qst/bell.hpp"

#include <cmath>
#include <sstream>

#include "qst/errors.hpp"

namespace qst {

namespace {

constexpr double kAngleTol = 0.01;  // degrees, matches rounded input files

// Polarizer angles are 180-degree periodic; reduce a difference into [-90, 90).
double angle_diff(double x_deg, double y_deg) {
    double d = std::fmod(x_deg - y_deg, 180.0);
    if (d < -90.0) d += 180.0;
    if (d >= 90.0) d -= 180.0;
    return d;
}

bool same_angle(double x_deg, double y_deg) {
    return std::abs(angle_diff(x_deg, y_deg)) <= kAngleTol;
}

double corrected(const BellRecord& r, bool subtract) {
    if (!subtract) return r.n_c;
    return std::max(0.0, r.n_c - accidental_rate(r.n_a, r.n_b, r.t_s, r.tau_s));
}

double rate_sigma(const BellRecord& r) {
    if (r.dn_c > 0.0) return r.dn_c;
    if (r.t_s <= 0.0 || r.n_c <= 0.0) return 0.0;
    return std::sqrt(r.n_c * r.t_s) / r.t_s;  // Poisson on integrated counts
}

struct ECorr {
    double e = 0.0;
    double var = 0.0;
};

// records in the order (a,b), (a+90,b+90), (a,b+90), (a+90,b)
ECorr e_with_variance(const std::array<BellRecord, 4>& rec, bool subtract) {
    double n1 = corrected(rec[0], subtract);
    double n2 = corrected(rec[1], subtract);
    double n3 = corrected(rec[2], subtract);
    double n4 = corrected(rec[3], subtract);
    double tot = n1 + n2 + n3 + n4;
    if (tot <= 0.0) {
        throw ZeroTotalError("correlation_e: total coincidence rate is zero");
    }
    ECorr out;
    out.e = (n1 + n2 - n3 - n4) / tot;
    double d12 = 2.0 * (n3 + n4) / (tot * tot);
    double d34 = -2.0 * (n1 + n2) / (tot * tot);
    const double d[4] = {d12, d12, d34, d34};
    for (int i = 0; i < 4; ++i) {
        double s = rate_sigma(rec[i]);
        out.var += (s * d[i]) * (s * d[i]);
    }
    return out;
}

void check_e_pattern(const std::array<BellRecord, 4>& rec) {
    const double a = rec[0].theta_a, b = rec[0].theta_b;
    bool ok = same_angle(rec[1].theta_a, a + 90) && same_angle(rec[1].theta_b, b + 90) &&
              same_angle(rec[2].theta_a, a) && same_angle(rec[2].theta_b, b + 90) &&
              same_angle(rec[3].theta_a, a + 90) && same_angle(rec[3].theta_b, b);
    if (!ok) {
        throw PatternMismatchError(
            "correlation_e: records do not form the (a,b),(a+90,b+90),(a,b+90),(a+90,b) pattern");
    }
}

}  // namespace

double accidental_rate(double n_a_cps, double n_b_cps, double t_s, double tau_s) {
    if (n_a_cps < 0 || n_b_cps < 0 || t_s < 0 || tau_s < 0) {
        throw DomainError("accidental_rate: inputs must be nonnegative");
    }
    if (t_s == 0.0) return 0.0;
    return tau_s * n_a_cps * n_b_cps / t_s;
}

double correlation_e(const std::array<BellRecord, 4>& records, bool subtract_accidentals) {
    check_e_pattern(records);
    return e_with_variance(records, subtract_accidentals).e;
}

BellResult chsh_s(const std::vector<BellRecord>& records, const ChshAngles& angles,
                  bool subtract_accidentals) {
    auto find = [&](double ta, double tb) -> const BellRecord& {
        for (const auto& r : records) {
            if (same_angle(r.theta_a, ta) && same_angle(r.theta_b, tb)) return r;
        }
        std::ostringstream msg;
        msg << "chsh_s: missing record for angle pair (" << ta << ", " << tb << ")";
        throw MissingCombinationError(msg.str());
    };
    auto block = [&](double ta, double tb) {
        std::array<BellRecord, 4> rec = {find(ta, tb), find(ta + 90, tb + 90),
                                         find(ta, tb + 90), find(ta + 90, tb)};
        return e_with_variance(rec, subtract_accidentals);
    };

    ECorr e_ab = block(angles.a, angles.b);
    ECorr e_abp = block(angles.a, angles.b_prime);
    ECorr e_apb = block(angles.a_prime, angles.b);
    ECorr e_apbp = block(angles.a_prime, angles.b_prime);

    BellResult out;
    out.e_values = {e_ab.e, e_abp.e, e_apb.e, e_apbp.e};
    out.s_value = std::abs(e_ab.e - e_abp.e) + std::abs(e_apb.e + e_apbp.e);
    // |dS/dE_i| = 1 for every term, so the variances add directly.
    out.s_sigma = std::sqrt(e_ab.var + e_abp.var + e_apb.var + e_apbp.var);
    out.accidentals_subtracted = subtract_accidentals;
    return out;
}

double visibility(const std::array<BellRecord, 4>& records) {
    double n_par = 0.0, n_perp = 0.0;
    for (const auto& r : records) {
        double d = angle_diff(r.theta_a, r.theta_b);
        if (std::abs(d) <= kAngleTol) {
            n_par += r.n_c;
        } else if (std::abs(d + 90.0) <= kAngleTol || std::abs(d - 90.0) <= kAngleTol) {
            n_perp += r.n_c;
        } else {
            throw PatternMismatchError("visibility: record is neither aligned nor orthogonal");
        }
    }
    double tot = n_par + n_perp;
    if (tot <= 0.0) {
        throw ZeroTotalError("visibility: total coincidence rate is zero");
    }
    return (n_par - n_perp) / tot;
}

}  // namespace qst
