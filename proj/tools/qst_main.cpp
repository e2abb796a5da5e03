// Command-line surface for the tomography pipeline: data ingestion,
// per-analysis subcommands, machine-readable JSON reports.
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 no convergence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qst/bell.hpp"
#include "qst/calibration.hpp"
#include "qst/errors.hpp"
#include "qst/io.hpp"
#include "qst/measures.hpp"
#include "qst/mle.hpp"
#include "qst/qmatrix.hpp"
#include "qst/simulator.hpp"
#include "qst/tomography.hpp"

using nlohmann::json;

namespace {

json rho_to_json(const qst::Mat4& rho) {
    json real = json::array(), imag = json::array();
    for (int i = 0; i < 4; ++i) {
        json r = json::array(), m = json::array();
        for (int j = 0; j < 4; ++j) {
            r.push_back(rho(i, j).real());
            m.push_back(rho(i, j).imag());
        }
        real.push_back(r);
        imag.push_back(m);
    }
    return json{{"real", real}, {"imag", imag}};
}

json measure_to_json(const qst::MeasureStats& m) {
    json j{{"value", m.value}};
    if (m.stddev) j["stddev"] = *m.stddev;
    return j;
}

void emit(const json& report, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        std::ofstream out(output_path);
        if (!out) throw qst::ParseError(output_path + ": cannot open file for writing");
        out << report.dump(2) << std::endl;
    }
}

json eigenvalues_json(const qst::Mat4& rho) {
    auto ev = qst::herm_eig(rho, 1e-6).values;
    return json{ev(0), ev(1), ev(2), ev(3)};
}

int run_tomo(const std::string& input, const std::string& output, bool subtract, int max_iter) {
    auto data = qst::read_tomography_csv(input);
    auto lin = qst::linear_reconstruct(data, subtract);
    qst::MleOptions opt;
    opt.subtract_accidentals = subtract;
    opt.max_iter = max_iter;
    auto fit = qst::mle_fit(data, opt);

    json report;
    report["n_norm"] = lin.n_norm;
    report["accidentals_subtracted"] = subtract;
    report["linear"] = {
        {"rho", rho_to_json(lin.rho)},
        {"eigenvalues", {lin.eigenvalues(0), lin.eigenvalues(1), lin.eigenvalues(2),
                         lin.eigenvalues(3)}},
        {"physical", {{"hermitian", lin.physical.hermitian},
                      {"unit_trace", lin.physical.unit_trace},
                      {"psd", lin.physical.psd},
                      {"purity_le_1", lin.physical.purity_le_1},
                      {"min_eigenvalue", lin.physical.min_eigenvalue}}},
    };
    report["mle"] = {
        {"rho", rho_to_json(fit.rho)},
        {"eigenvalues", eigenvalues_json(fit.rho)},
        {"likelihood", fit.likelihood_value},
        {"iterations", fit.iterations},
        {"converged", fit.converged},
    };
    emit(report, output);
    return fit.converged ? 0 : 4;
}

int run_measures(const std::string& input, const std::string& rho_path,
                 const std::string& output, bool subtract, int mc_trials,
                 std::uint64_t seed) {
    qst::MeasuresReport rep;
    if (!rho_path.empty()) {
        qst::Mat4 rho = qst::read_rho_text(rho_path);
        rho = (rho + rho.adjoint().eval()) / 2.0;  // symmetrize
        rho /= rho.trace().real();                 // renormalize
        rep = qst::measures_of(rho);
    } else {
        auto data = qst::read_tomography_csv(input);
        qst::MleOptions opt;
        opt.subtract_accidentals = subtract;
        if (mc_trials > 0) {
            rep = qst::report_with_uncertainty(data, mc_trials, seed, opt);
        } else {
            rep = qst::measures_of(qst::mle_fit(data, opt).rho);
        }
    }
    json report{
        {"von_neumann_bits", measure_to_json(rep.von_neumann)},
        {"linear_entropy", measure_to_json(rep.linear_entropy)},
        {"purity", measure_to_json(rep.purity)},
        {"renyi2_a_nats", measure_to_json(rep.renyi2_a)},
        {"concurrence", measure_to_json(rep.concurrence)},
        {"tangle", measure_to_json(rep.tangle)},
        {"eof", measure_to_json(rep.eof)},
        {"log_negativity", measure_to_json(rep.log_negativity)},
    };
    if (rep.trials_requested > 0) {
        report["mc_trials"] = rep.trials_requested;
        report["mc_trials_dropped"] = rep.trials_dropped;
    }
    emit(report, output);
    return 0;
}

int run_bell(const std::string& input, const std::string& output, bool subtract,
             bool visibility_mode, const std::vector<double>& angle_layout) {
    auto records = qst::read_bell_csv(input);
    json report;
    if (visibility_mode) {
        // group rows into bases of four by first-angle families
        json bases = json::array();
        for (size_t i = 0; i + 3 < records.size(); i += 4) {
            std::array<qst::BellRecord, 4> block = {records[i], records[i + 1], records[i + 2],
                                                    records[i + 3]};
            bases.push_back({{"theta_a", records[i].theta_a},
                             {"visibility", qst::visibility(block)}});
        }
        report["visibilities"] = bases;
    } else {
        qst::ChshAngles angles;
        if (!angle_layout.empty()) {
            angles = {angle_layout[0], angle_layout[1], angle_layout[2], angle_layout[3]};
        }
        auto res = qst::chsh_s(records, angles, subtract);
        report["s"] = res.s_value;
        report["s_sigma"] = res.s_sigma;
        report["e_values"] = {res.e_values[0], res.e_values[1], res.e_values[2], res.e_values[3]};
        report["accidentals_subtracted"] = res.accidentals_subtracted;
        json acc = json::array();
        for (const auto& r : records) {
            acc.push_back(qst::accidental_rate(r.n_a, r.n_b, r.t_s, r.tau_s));
        }
        report["accidental_rates"] = acc;
    }
    emit(report, output);
    return 0;
}

int run_simulate(bool use_pump_angles, double theta_p, double phi, double n_flux,
                 double singles_a, double singles_b, double t_s, double tau_s, bool noise,
                 std::uint64_t seed, bool hvt, const std::string& tomo_out,
                 const std::string& bell_out, const std::vector<double>& angle_layout) {
    qst::PumpState pump = use_pump_angles ? qst::PumpState{theta_p, phi}
                                          : qst::PumpState{45.0, 0.0};
    qst::Mat4 rho = qst::spdc_state(pump);
    qst::DetectorModel det;
    det.n_flux = n_flux;
    det.singles_a = singles_a;
    det.singles_b = singles_b;
    det.integration_t = t_s;
    det.window_tau = tau_s;

    if (!tomo_out.empty()) {
        qst::TomographyInput input;
        if (noise) {
            input.records = qst::sample_counts(rho, qst::standard_settings(), det, seed);
        } else {
            const auto& settings = qst::standard_settings();
            const auto& labels = qst::standard_labels();
            for (int nu = 0; nu < 16; ++nu) {
                qst::CountRecord rec;
                rec.nu = nu + 1;
                rec.label = labels[nu];
                rec.setting = settings[nu];
                rec.n_a = singles_a;
                rec.n_b = singles_b;
                rec.t_s = t_s;
                rec.tau_s = tau_s;
                rec.n_c = qst::predict_counts(rho, settings[nu], det);
                input.records.push_back(rec);
            }
        }
        qst::write_tomography_csv(tomo_out, input);
    }

    if (!bell_out.empty()) {
        qst::ChshAngles ang;
        if (!angle_layout.empty()) {
            ang = {angle_layout[0], angle_layout[1], angle_layout[2], angle_layout[3]};
        }
        std::mt19937_64 rng(seed ^ 0xb5ad4eceda1ce2a9ULL);
        std::vector<qst::BellRecord> records;
        for (double ta : {ang.a, ang.a + 90, ang.a_prime, ang.a_prime + 90}) {
            for (double tb : {ang.b, ang.b + 90, ang.b_prime, ang.b_prime + 90}) {
                qst::BellRecord r;
                r.theta_a = ta;
                r.theta_b = tb;
                r.n_a = singles_a;
                r.n_b = singles_b;
                r.t_s = t_s;
                r.tau_s = tau_s;
                double p = hvt ? qst::hvt_pvv(ta, tb) : qst::quantum_pvv(ta, tb, pump);
                double rate = n_flux * p +
                              qst::accidental_rate(singles_a, singles_b, t_s, tau_s);
                if (noise && rate > 0) {
                    std::poisson_distribution<long long> poisson(rate * t_s);
                    r.n_c = static_cast<double>(poisson(rng)) / t_s;
                    r.dn_c = std::sqrt(std::max(r.n_c, 1.0) * t_s) / t_s;
                } else {
                    r.n_c = rate;
                    r.dn_c = 0.0;
                }
                records.push_back(r);
            }
        }
        qst::write_bell_csv(bell_out, records);
    }
    return 0;
}

int run_calibrate(const std::string& pump_path, const std::string& power_path,
                  const std::string& output) {
    json report;
    if (!pump_path.empty()) {
        auto records = qst::read_bell_csv(pump_path);
        auto find = [&](double ta, double tb) -> double {
            for (const auto& r : records) {
                if (std::abs(r.theta_a - ta) < 0.01 && std::abs(r.theta_b - tb) < 0.01)
                    return r.n_c;
            }
            throw qst::MissingCombinationError("calibrate: missing setting (" +
                                               std::to_string(ta) + "," + std::to_string(tb) +
                                               ")");
        };
        auto fit = qst::pump_params(find(0, 0), find(90, 90), find(45, 45), find(0, 90),
                                    find(90, 0));
        report["pump"] = {{"d_background_cps", fit.d_background},
                          {"n0_cps", fit.n0},
                          {"theta_p_deg", fit.theta_p_deg},
                          {"phi_m_deg", fit.phi_m_deg}};
    }
    if (!power_path.empty()) {
        auto points = qst::read_power_csv(power_path);
        auto fit = qst::power_fit(points);
        report["power"] = {{"slope_cps_per_mw", fit.slope_alpha},
                           {"intercept_cps", fit.intercept},
                           {"residual_rms_cps", fit.residual_rms}};
    }
    if (report.empty()) {
        throw qst::DomainError("calibrate: provide --pump and/or --power input");
    }
    emit(report, output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit polarization tomography, CHSH analysis and SPDC simulation"};
    app.require_subcommand(1);

    std::string input, rho_path, output, pump_path, power_path;
    std::string state = "bell", tomo_out, bell_out;
    bool keep_accidentals = false, visibility_mode = false, no_noise = false, hvt = false;
    int mc_trials = 200, max_iter = 50000;
    std::uint64_t seed = 1;
    double theta_p = 45.0, phi = 0.0, n_flux = 1000.0;
    double singles_a = 0.0, singles_b = 0.0, t_s = 1.0, tau_s = 0.0;
    std::vector<double> angle_layout;

    auto* tomo = app.add_subcommand("tomo", "Linear + maximum-likelihood reconstruction");
    tomo->add_option("-i,--input", input, "tomography CSV (16 rows)")->required();
    tomo->add_option("-o,--output", output, "report path (default stdout)");
    tomo->add_flag("--keep-accidentals", keep_accidentals,
                   "do not subtract accidental coincidences");
    tomo->add_option("--max-iter", max_iter, "optimizer evaluation budget");

    auto* meas = app.add_subcommand("measures", "Entanglement measures and entropies");
    meas->add_option("-i,--input", input, "tomography CSV (16 rows)");
    meas->add_option("--rho", rho_path, "serialized density matrix instead of counts");
    meas->add_option("-o,--output", output, "report path (default stdout)");
    meas->add_option("--mc-trials", mc_trials, "Monte-Carlo resampling trials (0 = none)");
    meas->add_option("--seed", seed, "Monte-Carlo seed");
    meas->add_flag("--keep-accidentals", keep_accidentals,
                   "do not subtract accidental coincidences");

    auto* bell = app.add_subcommand("bell", "CHSH S parameter or visibility analysis");
    bell->add_option("-i,--input", input, "Bell CSV")->required();
    bell->add_option("-o,--output", output, "report path (default stdout)");
    bell->add_flag("--visibility", visibility_mode, "compute per-basis visibilities");
    bell->add_flag("--keep-accidentals", keep_accidentals,
                   "do not subtract accidental coincidences");
    bell->add_option("--angles", angle_layout, "CHSH angles a,a',b,b'")->expected(4);

    auto* sim = app.add_subcommand("simulate", "Generate synthetic measurement CSVs");
    sim->add_option("--state", state, "'bell' or 'pump' (use --theta-p/--phi)");
    sim->add_option("--theta-p", theta_p, "pump polarization angle, degrees");
    sim->add_option("--phi", phi, "pump phase, degrees");
    sim->add_option("--n-flux", n_flux, "pair detections per second");
    sim->add_option("--singles-a", singles_a, "singles rate arm A, cps");
    sim->add_option("--singles-b", singles_b, "singles rate arm B, cps");
    sim->add_option("--t", t_s, "integration time per setting, s");
    sim->add_option("--tau", tau_s, "coincidence window, s");
    sim->add_flag("--no-noise", no_noise, "emit exact expected rates");
    sim->add_flag("--hvt", hvt, "use the hidden-variable model for Bell data");
    sim->add_option("--seed", seed, "random seed");
    sim->add_option("--tomo-out", tomo_out, "write a tomography CSV here");
    sim->add_option("--bell-out", bell_out, "write a Bell CSV here");
    sim->add_option("--angles", angle_layout, "CHSH angles a,a',b,b'")->expected(4);

    auto* cal = app.add_subcommand("calibrate", "Pump parameters and power-scan fit");
    cal->add_option("--pump", pump_path, "four-setting CSV (Bell schema)");
    cal->add_option("--power", power_path, "power-scan CSV (power_mw,cc_rate_cps)");
    cal->add_option("-o,--output", output, "report path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tomo->parsed()) return run_tomo(input, output, !keep_accidentals, max_iter);
        if (meas->parsed()) {
            if (input.empty() == rho_path.empty()) {
                throw qst::DomainError("measures: provide exactly one of --input or --rho");
            }
            return run_measures(input, rho_path, output, !keep_accidentals, mc_trials, seed);
        }
        if (bell->parsed())
            return run_bell(input, output, !keep_accidentals, visibility_mode, angle_layout);
        if (sim->parsed())
            return run_simulate(state, theta_p, phi, n_flux, singles_a, singles_b, t_s, tau_s,
                                !no_noise, seed, hvt, tomo_out, bell_out, angle_layout);
        if (cal->parsed()) return run_calibrate(pump_path, power_path, output);
    } catch (const qst::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    }
    return 0;
}
