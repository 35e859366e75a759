#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavemix/bloch.hpp"
#include "wavemix/coherent.hpp"
#include "wavemix/diagrams.hpp"
#include "wavemix/emit.hpp"
#include "wavemix/multiphoton.hpp"
#include "wavemix/semiclassical.hpp"
#include "wavemix/verify.hpp"

namespace py = pybind11;
using namespace wavemix;

namespace {

py::object fraction_of(const BigRat& r) {
  const py::object pyint = py::module_::import("builtins").attr("int");
  const py::object num = pyint(boost::multiprecision::numerator(r).str());
  const py::object den = pyint(boost::multiprecision::denominator(r).str());
  return py::module_::import("fractions").attr("Fraction")(num, den);
}

}  // namespace

PYBIND11_MODULE(wavemix, m) {
  m.doc() = "wave-mixing spectra of a bichromatic drive on a waveguide-coupled two-level system";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::enum_<Side>(m, "Side").value("Right", Side::Right).value("Left", Side::Left);
  py::enum_<SigmaForm>(m, "SigmaForm")
      .value("Closed", SigmaForm::Closed)
      .value("Series", SigmaForm::Series);
  py::enum_<DriveRegime>(m, "DriveRegime")
      .value("Full", DriveRegime::Full)
      .value("Weak", DriveRegime::Weak);
  py::enum_<ChiralityDirection>(m, "ChiralityDirection")
      .value("ToEO", ChiralityDirection::ToEO)
      .value("ToRL", ChiralityDirection::ToRL);
  py::enum_<TwoPhotonBasis>(m, "TwoPhotonBasis")
      .value("EMode", TwoPhotonBasis::EMode)
      .value("RL", TwoPhotonBasis::RL);
  py::enum_<PeakChannel>(m, "PeakChannel")
      .value("EMode", PeakChannel::EMode)
      .value("Transmitted", PeakChannel::Transmitted)
      .value("Reflected", PeakChannel::Reflected);
  py::enum_<PrefactorMode>(m, "PrefactorMode")
      .value("Sym", PrefactorMode::Sym)
      .value("Nonsym", PrefactorMode::Nonsym);
  py::enum_<PhotonStatistics>(m, "PhotonStatistics")
      .value("Poisson", PhotonStatistics::Poisson)
      .value("Gaussian", PhotonStatistics::Gaussian);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("omega01", &SystemParams::omega01)
      .def_readwrite("gamma", &SystemParams::gamma)
      .def_readwrite("v", &SystemParams::v)
      .def("k_res", &SystemParams::k_res);
  py::class_<DriveConfig>(m, "DriveConfig")
      .def(py::init<>())
      .def_readwrite("rabi_a", &DriveConfig::rabi_a)
      .def_readwrite("rabi_b", &DriveConfig::rabi_b)
      .def_readwrite("delta", &DriveConfig::delta)
      .def_readonly("quasistationary_strained", &DriveConfig::quasistationary_strained);
  py::class_<PeakRecord>(m, "PeakRecord")
      .def_readonly("p", &PeakRecord::p)
      .def_readonly("side", &PeakRecord::side)
      .def_readonly("frequency", &PeakRecord::frequency)
      .def_readonly("amplitude", &PeakRecord::amplitude)
      .def_readonly("intensity", &PeakRecord::intensity);
  py::class_<PeakSpectrum>(m, "PeakSpectrum")
      .def_readonly("records", &PeakSpectrum::records);
  py::class_<MixingAngle>(m, "MixingAngle")
      .def_readonly("theta", &MixingAngle::theta)
      .def_readonly("y", &MixingAngle::y)
      .def_readonly("sin_theta", &MixingAngle::sin_theta)
      .def_readonly("quotient", &MixingAngle::quotient);
  py::class_<ScatterCoeffs>(m, "ScatterCoeffs")
      .def_readonly("t", &ScatterCoeffs::t)
      .def_readonly("r", &ScatterCoeffs::r)
      .def_readonly("t_tilde", &ScatterCoeffs::t_tilde);
  py::class_<ConnectedAmplitude>(m, "ConnectedAmplitude")
      .def_readonly("coefficient", &ConnectedAmplitude::coefficient)
      .def_readonly("conserved_total", &ConnectedAmplitude::conserved_total)
      .def_readonly("order", &ConnectedAmplitude::order);
  py::class_<MomentumDistribution>(m, "MomentumDistribution")
      .def_readonly("k_grid", &MomentumDistribution::k_grid)
      .def_readonly("intensity", &MomentumDistribution::intensity)
      .def_readonly("linewidth", &MomentumDistribution::linewidth);
  py::class_<CoherentDrive>(m, "CoherentDrive")
      .def(py::init<double, double, double, double>(), py::arg("alpha2"), py::arg("beta2"),
           py::arg("phase_a") = 0.0, py::arg("phase_b") = 0.0)
      .def_readwrite("alpha2", &CoherentDrive::alpha2)
      .def_readwrite("beta2", &CoherentDrive::beta2)
      .def_readwrite("phase_a", &CoherentDrive::phase_a)
      .def_readwrite("phase_b", &CoherentDrive::phase_b);
  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init<>())
      .def_readwrite("n_max_a", &TruncationPolicy::n_max_a)
      .def_readwrite("n_max_b", &TruncationPolicy::n_max_b)
      .def_readwrite("tail_bound", &TruncationPolicy::tail_bound);
  py::class_<CoherentAmplitude>(m, "CoherentAmplitude")
      .def_readonly("value", &CoherentAmplitude::value)
      .def_readonly("tail_estimate", &CoherentAmplitude::tail_estimate);
  py::class_<BlochState>(m, "BlochState")
      .def_readonly("s_minus", &BlochState::s_minus)
      .def_readonly("s_z", &BlochState::s_z);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("samples_per_period", &Trajectory::samples_per_period)
      .def_readonly("record_periods", &Trajectory::record_periods);
  py::class_<IntegrationOptions>(m, "IntegrationOptions")
      .def(py::init<>())
      .def_readwrite("settle_periods", &IntegrationOptions::settle_periods)
      .def_readwrite("record_periods", &IntegrationOptions::record_periods)
      .def_readwrite("rel_tol", &IntegrationOptions::rel_tol)
      .def_readwrite("samples_per_period", &IntegrationOptions::samples_per_period);

  m.def("validate_config", &validate_config, py::arg("raw"));
  m.def("config_to_json", &config_to_json);
  m.def("mixing_angle", &mixing_angle);
  m.def("sigma_minus", &sigma_minus, py::arg("drive"), py::arg("params"), py::arg("t"),
        py::arg("form") = SigmaForm::Closed, py::arg("p_max") = 0);
  m.def("side_peak_amplitude", &side_peak_amplitude, py::arg("drive"), py::arg("params"),
        py::arg("p"), py::arg("side"), py::arg("regime") = DriveRegime::Full);
  m.def("peak_photon_number", &peak_photon_number);
  m.def("semiclassical_spectrum", &semiclassical_spectrum, py::arg("drive"), py::arg("params"),
        py::arg("max_p"), py::arg("regime") = DriveRegime::Full);

  m.def("integrate_bloch",
        py::overload_cast<const DriveConfig&, const SystemParams&, const IntegrationOptions&>(
            &integrate_bloch),
        py::arg("drive"), py::arg("params"), py::arg("options") = IntegrationOptions{});
  m.def("extract_harmonics", &extract_harmonics);
  m.def("side_peak_harmonic", &side_peak_harmonic);

  m.def("chirality_rotate", &chirality_rotate);
  m.def("single_photon_coeffs", &single_photon_coeffs);
  m.def("two_photon_connected", &two_photon_connected, py::arg("p1"), py::arg("p2"), py::arg("k1"),
        py::arg("k2"), py::arg("params"), py::arg("basis") = TwoPhotonBasis::EMode);

  m.def("semion_bubble", &semion_bubble);
  m.def("dressed_green", &dressed_green);
  m.def("loop_amplitude", [](int p) { return to_complex(loop_amplitude(p)); });
  m.def("extract_gamma", [](int p) {
    const GammaValue g = extract_gamma(p);
    return fraction_of(g.value);
  });
  m.def("gamma_table", [](int p_max) {
    py::list out;
    for (int p = 0; p <= p_max; ++p) out.append(fraction_of(extract_gamma(p).value));
    return out;
  });
  m.def("connected_T", &connected_T);
  m.def("derivative_prefactor",
        [](int n_a, int n_b, int p, PrefactorMode mode, int cap) {
          return fraction_of(derivative_prefactor(n_a, n_b, p, mode, cap));
        },
        py::arg("n_a"), py::arg("n_b"), py::arg("p"), py::arg("mode"), py::arg("degree_cap") = 40);

  m.def("disconnected_S", &disconnected_S);
  m.def("stimulation_ratio",
        [](int p, int n_b) { return fraction_of(stimulation_ratio(p, n_b)); });
  m.def("spectrum_222", &spectrum_222, py::arg("k_grid"), py::arg("k_a"), py::arg("k_b"),
        py::arg("linewidth"), py::arg("params"), py::arg("n_b_present"));

  m.def("photon_number_pmf", &photon_number_pmf);
  m.def("coherent_peak_amplitude", &coherent_peak_amplitude, py::arg("p"), py::arg("drive"),
        py::arg("channel"), py::arg("params"), py::arg("trunc") = TruncationPolicy{},
        py::arg("side") = Side::Right, py::arg("detuning") = 0.0,
        py::arg("pass_override") =
            std::make_optional(std::pair<Complex, Complex>{{1.0, 0.0}, {1.0, 0.0}}));
  m.def("classical_limit_J", &classical_limit_J, py::arg("p"), py::arg("n_a"), py::arg("n_b"),
        py::arg("params"), py::arg("side") = Side::Right);
  m.def("interaction_length_ratio", &interaction_length_ratio);

  m.def("emit_spectrum",
        [](const PeakSpectrum& s, const std::string& fmt) {
          return emit_spectrum(s, fmt == "json" ? EmitFormat::Json : EmitFormat::Csv);
        },
        py::arg("spectrum"), py::arg("format") = "csv");

  m.def("run_acceptance", []() {
    py::list out;
    for (const auto& r : run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
}
