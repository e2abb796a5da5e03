// Python bindings for the tomography pipeline. Density matrices and kets
// cross the boundary as numpy arrays via Eigen.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qst/bell.hpp"
#include "qst/calibration.hpp"
#include "qst/errors.hpp"
#include "qst/io.hpp"
#include "qst/measures.hpp"
#include "qst/mle.hpp"
#include "qst/polarization.hpp"
#include "qst/qmatrix.hpp"
#include "qst/simulator.hpp"
#include "qst/tomography.hpp"

namespace py = pybind11;
using namespace qst;

namespace {

CholeskyParams params_from_list(const std::vector<double>& z) {
    if (z.size() != 16) throw DomainError("expected 16 parameters");
    CholeskyParams p;
    std::copy(z.begin(), z.end(), p.z.begin());
    return p;
}

py::dict measure_dict(const MeasuresReport& r) {
    auto one = [](const MeasureStats& m) {
        py::dict d;
        d["value"] = m.value;
        if (m.stddev) d["stddev"] = *m.stddev;
        return d;
    };
    py::dict d;
    d["von_neumann_bits"] = one(r.von_neumann);
    d["linear_entropy"] = one(r.linear_entropy);
    d["purity"] = one(r.purity);
    d["renyi2_a_nats"] = one(r.renyi2_a);
    d["concurrence"] = one(r.concurrence);
    d["tangle"] = one(r.tangle);
    d["eof"] = one(r.eof);
    d["log_negativity"] = one(r.log_negativity);
    if (r.trials_requested > 0) {
        d["mc_trials"] = r.trials_requested;
        d["mc_trials_dropped"] = r.trials_dropped;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-qubit polarization tomography, entanglement measures, CHSH analysis";

    py::register_exception<Error>(m, "QstError");

    py::enum_<Subsystem>(m, "Subsystem")
        .value("A", Subsystem::A)
        .value("B", Subsystem::B);

    py::class_<ProjectiveSetting>(m, "ProjectiveSetting")
        .def(py::init<>())
        .def(py::init([](double ha, double qa, double hb, double qb) {
                 return ProjectiveSetting{ha, qa, hb, qb};
             }),
             py::arg("h_a"), py::arg("q_a"), py::arg("h_b"), py::arg("q_b"))
        .def_readwrite("h_a", &ProjectiveSetting::h_a)
        .def_readwrite("q_a", &ProjectiveSetting::q_a)
        .def_readwrite("h_b", &ProjectiveSetting::h_b)
        .def_readwrite("q_b", &ProjectiveSetting::q_b)
        .def("__repr__", [](const ProjectiveSetting& s) {
            return "ProjectiveSetting(" + std::to_string(s.h_a) + ", " + std::to_string(s.q_a) +
                   ", " + std::to_string(s.h_b) + ", " + std::to_string(s.q_b) + ")";
        });

    py::class_<CountRecord>(m, "CountRecord")
        .def(py::init<>())
        .def_readwrite("nu", &CountRecord::nu)
        .def_readwrite("label", &CountRecord::label)
        .def_readwrite("setting", &CountRecord::setting)
        .def_readwrite("n_a", &CountRecord::n_a)
        .def_readwrite("n_b", &CountRecord::n_b)
        .def_readwrite("n_c", &CountRecord::n_c)
        .def_readwrite("t_s", &CountRecord::t_s)
        .def_readwrite("tau_s", &CountRecord::tau_s);

    py::class_<TomographyInput>(m, "TomographyInput")
        .def(py::init<>())
        .def_readwrite("records", &TomographyInput::records);

    py::class_<BellRecord>(m, "BellRecord")
        .def(py::init<>())
        .def_readwrite("theta_a", &BellRecord::theta_a)
        .def_readwrite("theta_b", &BellRecord::theta_b)
        .def_readwrite("n_a", &BellRecord::n_a)
        .def_readwrite("n_b", &BellRecord::n_b)
        .def_readwrite("n_c", &BellRecord::n_c)
        .def_readwrite("dn_c", &BellRecord::dn_c)
        .def_readwrite("t_s", &BellRecord::t_s)
        .def_readwrite("tau_s", &BellRecord::tau_s);

    py::class_<ChshAngles>(m, "ChshAngles")
        .def(py::init<>())
        .def(py::init([](double a, double ap, double b, double bp) {
                 return ChshAngles{a, ap, b, bp};
             }),
             py::arg("a"), py::arg("a_prime"), py::arg("b"), py::arg("b_prime"))
        .def_readwrite("a", &ChshAngles::a)
        .def_readwrite("a_prime", &ChshAngles::a_prime)
        .def_readwrite("b", &ChshAngles::b)
        .def_readwrite("b_prime", &ChshAngles::b_prime);

    py::class_<PumpState>(m, "PumpState")
        .def(py::init<>())
        .def(py::init([](double theta, double phi) { return PumpState{theta, phi}; }),
             py::arg("theta_p_deg"), py::arg("phi_deg"))
        .def_readwrite("theta_p_deg", &PumpState::theta_p_deg)
        .def_readwrite("phi_deg", &PumpState::phi_deg);

    py::class_<DetectorModel>(m, "DetectorModel")
        .def(py::init<>())
        .def_readwrite("n_flux", &DetectorModel::n_flux)
        .def_readwrite("window_tau", &DetectorModel::window_tau)
        .def_readwrite("integration_t", &DetectorModel::integration_t)
        .def_readwrite("singles_a", &DetectorModel::singles_a)
        .def_readwrite("singles_b", &DetectorModel::singles_b);

    // matrix kernels
    m.def("herm_eig", [](const Mat4& rho) {
        auto e = herm_eig(rho, 1e-6);
        return py::make_tuple(e.values, e.vectors);
    });
    m.def("psd_sqrt", [](const Mat4& m4) { return psd_sqrt(m4, 1e-6); });
    m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"));
    m.def("partial_transpose", &partial_transpose, py::arg("rho"), py::arg("on"));
    m.def("trace_norm", py::overload_cast<const Mat4&>(&trace_norm));
    m.def("fidelity", &fidelity);
    m.def("trace_distance", &trace_distance);
    m.def("gamma_basis", [] {
        std::vector<Mat4> out(gamma_basis().begin(), gamma_basis().end());
        return out;
    });

    // polarization
    m.def("projector_state", &projector_state, py::arg("h_deg"), py::arg("q_deg"));
    m.def("two_qubit_projector", &two_qubit_projector);
    m.def("standard_settings", [] {
        return std::vector<ProjectiveSetting>(standard_settings().begin(),
                                              standard_settings().end());
    });
    m.def("standard_labels", [] {
        return std::vector<std::string>(standard_labels().begin(), standard_labels().end());
    });

    // simulator
    m.def("spdc_state", &spdc_state);
    m.def("quantum_pvv", &quantum_pvv, py::arg("alpha_deg"), py::arg("beta_deg"),
          py::arg("pump"));
    m.def("hvt_pvv", &hvt_pvv, py::arg("alpha_deg"), py::arg("beta_deg"));
    m.def("predict_counts", &predict_counts);
    m.def("sample_counts", [](const Mat4& rho, const DetectorModel& d, std::uint64_t seed) {
        return sample_counts(rho, standard_settings(), d, seed);
    });
    m.def("pair_weights", [](double q, int n_max) { return pair_weights(q, n_max).weights; });
    m.def("marginal_probability", &marginal_probability);

    // tomography + mle
    m.def("linear_reconstruct",
          [](const TomographyInput& in, bool subtract) {
              auto rec = linear_reconstruct(in, subtract);
              py::dict d;
              d["rho"] = rec.rho;
              d["n_norm"] = rec.n_norm;
              d["eigenvalues"] = rec.eigenvalues;
              d["physical"] = rec.physical.all();
              return d;
          },
          py::arg("input"), py::arg("subtract_accidentals") = true);
    m.def("rho_from_params",
          [](const std::vector<double>& z) { return rho_from_params(params_from_list(z)); });
    m.def("params_from_rho", [](const Mat4& rho) {
        auto p = params_from_rho(rho);
        return std::vector<double>(p.z.begin(), p.z.end());
    });
    m.def("mle_fit",
          [](const TomographyInput& in, bool subtract, int max_iter) {
              MleOptions opt;
              opt.subtract_accidentals = subtract;
              opt.max_iter = max_iter;
              auto fit = mle_fit(in, opt);
              py::dict d;
              d["rho"] = fit.rho;
              d["likelihood"] = fit.likelihood_value;
              d["iterations"] = fit.iterations;
              d["converged"] = fit.converged;
              d["n_norm"] = fit.n_norm;
              return d;
          },
          py::arg("input"), py::arg("subtract_accidentals") = true,
          py::arg("max_iter") = 50000);

    // measures
    m.def("von_neumann", &von_neumann);
    m.def("linear_entropy", &linear_entropy);
    m.def("purity", &purity);
    m.def("concurrence", &concurrence);
    m.def("tangle_and_eof", &tangle_and_eof);
    m.def("renyi2", &renyi2, py::arg("rho"), py::arg("subsystem"));
    m.def("log_negativity", &log_negativity);
    m.def("measures_of", [](const Mat4& rho) { return measure_dict(measures_of(rho)); });
    m.def("report_with_uncertainty",
          [](const TomographyInput& in, int trials, std::uint64_t seed, bool subtract) {
              MleOptions opt;
              opt.subtract_accidentals = subtract;
              return measure_dict(report_with_uncertainty(in, trials, seed, opt));
          },
          py::arg("input"), py::arg("trials"), py::arg("seed"),
          py::arg("subtract_accidentals") = true);

    // bell
    m.def("accidental_rate", &accidental_rate);
    m.def("correlation_e",
          [](const std::vector<BellRecord>& recs, bool subtract) {
              if (recs.size() != 4) throw DomainError("correlation_e takes 4 records");
              std::array<BellRecord, 4> a = {recs[0], recs[1], recs[2], recs[3]};
              return correlation_e(a, subtract);
          },
          py::arg("records"), py::arg("subtract_accidentals") = false);
    m.def("chsh_s",
          [](const std::vector<BellRecord>& recs, const ChshAngles& ang, bool subtract) {
              auto r = chsh_s(recs, ang, subtract);
              py::dict d;
              d["s"] = r.s_value;
              d["s_sigma"] = r.s_sigma;
              d["e_values"] = r.e_values;
              d["accidentals_subtracted"] = r.accidentals_subtracted;
              return d;
          },
          py::arg("records"), py::arg("angles") = ChshAngles{},
          py::arg("subtract_accidentals") = false);
    m.def("visibility", [](const std::vector<BellRecord>& recs) {
        if (recs.size() != 4) throw DomainError("visibility takes 4 records");
        std::array<BellRecord, 4> a = {recs[0], recs[1], recs[2], recs[3]};
        return visibility(a);
    });

    // calibration
    m.def("pump_params", [](double n00, double n9090, double n4545, double n090, double n900) {
        auto f = pump_params(n00, n9090, n4545, n090, n900);
        py::dict d;
        d["d_background"] = f.d_background;
        d["n0"] = f.n0;
        d["theta_p_deg"] = f.theta_p_deg;
        d["phi_m_deg"] = f.phi_m_deg;
        return d;
    });
    m.def("detector_efficiency", [](double nc, double n2) {
        auto e = detector_efficiency(nc, n2);
        return py::make_tuple(e.eta, e.within_unit);
    });
    m.def("power_fit", [](const std::vector<std::pair<double, double>>& pts) {
        std::vector<PowerPoint> points;
        for (auto& [p, r] : pts) points.push_back({p, r});
        auto f = power_fit(points);
        py::dict d;
        d["slope_alpha"] = f.slope_alpha;
        d["intercept"] = f.intercept;
        d["residual_rms"] = f.residual_rms;
        return d;
    });
    m.def("chi2_effective",
          [](double alpha, double length_m, double area_m2, double n_pump, double n_spdc,
             double omega_p, double duty) {
              CrystalParams c{length_m, area_m2, n_pump, n_spdc, omega_p, duty};
              return chi2_effective(alpha, c);
          },
          py::arg("slope_alpha_per_watt"), py::arg("length_m"), py::arg("area_m2"),
          py::arg("n_pump"), py::arg("n_spdc"), py::arg("omega_p"), py::arg("pulse_duty") = 1.0);

    // io
    m.def("read_tomography_csv", &read_tomography_csv);
    m.def("write_tomography_csv", &write_tomography_csv);
    m.def("read_bell_csv", &read_bell_csv);
    m.def("write_bell_csv", &write_bell_csv);
    m.def("read_rho_text", &read_rho_text);
    m.def("write_rho_text", &write_rho_text);
}
