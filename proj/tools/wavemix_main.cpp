#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavemix/bloch.hpp"
#include "wavemix/coherent.hpp"
#include "wavemix/diagrams.hpp"
#include "wavemix/emit.hpp"
#include "wavemix/multiphoton.hpp"
#include "wavemix/semiclassical.hpp"
#include "wavemix/verify.hpp"

namespace {

using namespace wavemix;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string config_path;
  std::string output_path;
  std::string format = "csv";
  std::optional<double> omega01, gamma, v, rabi_a, rabi_b, delta;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_drive) {
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--output,-o", o.output_path, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--omega01", o.omega01, "transition frequency (default 10)");
  cmd->add_option("--gamma", o.gamma, "radiative rate (default 1)");
  cmd->add_option("--v", o.v, "photon speed (default 1)");
  if (with_drive) {
    cmd->add_option("--rabi-a", o.rabi_a, "Rabi amplitude of mode A");
    cmd->add_option("--rabi-b", o.rabi_b, "Rabi amplitude of mode B");
    cmd->add_option("--delta", o.delta, "detuning (omega_A = omega01 + delta)");
  }
}

// flags override config-file values; missing required keys are usage errors
ParamMap merge_config(const CommonOpts& o, bool need_drive) {
  ParamMap map;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot read config file '" + o.config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    map = parse_config_json(ss.str());
  }
  if (o.omega01) map["omega01"] = *o.omega01;
  if (o.gamma) map["gamma"] = *o.gamma;
  if (o.v) map["v"] = *o.v;
  if (o.rabi_a) map["rabi_a"] = *o.rabi_a;
  if (o.rabi_b) map["rabi_b"] = *o.rabi_b;
  if (o.delta) map["delta"] = *o.delta;
  if (!map.count("omega01")) map["omega01"] = 10.0;
  if (!map.count("gamma")) map["gamma"] = 1.0;
  if (need_drive) {
    for (const char* key : {"rabi_a", "rabi_b", "delta"}) {
      if (!map.count(key))
        throw UsageError(std::string("missing required parameter '") + key +
                         "' (flag or config file)");
    }
  } else {
    if (!map.count("rabi_a")) map["rabi_a"] = 0.0;
    if (!map.count("rabi_b")) map["rabi_b"] = 0.0;
    if (!map.count("delta")) map["delta"] = 0.01;
  }
  return map;
}

void emit_output(const CommonOpts& o, const std::string& text) {
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    write_text(o.output_path, text);
  }
}

EmitFormat format_of(const CommonOpts& o) {
  return o.format == "json" ? EmitFormat::Json : EmitFormat::Csv;
}

int thread_cap() {
  if (const char* env = std::getenv("WAVEMIX_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Sweep {
  std::string key;
  std::vector<double> values;
};

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--sweep expects key=lo:hi:n");
  Sweep s;
  s.key = text.substr(0, eq);
  if (s.key != "rabi_a" && s.key != "rabi_b" && s.key != "delta")
    throw UsageError("--sweep key must be rabi_a, rabi_b or delta");
  double lo = 0, hi = 0;
  int n = 0;
  if (std::sscanf(text.c_str() + eq + 1, "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1 || n > 100000)
    throw UsageError("--sweep expects key=lo:hi:n with 1 <= n <= 100000");
  for (int i = 0; i < n; ++i)
    s.values.push_back(n == 1 ? lo : lo + (hi - lo) * i / static_cast<double>(n - 1));
  std::sort(s.values.begin(), s.values.end());  // emit in sorted parameter order
  return s;
}

int cmd_semiclassical(const CommonOpts& o, int orders, const std::string& regime_name,
                      const std::string& sweep_text) {
  const DriveRegime regime = regime_name == "weak" ? DriveRegime::Weak : DriveRegime::Full;
  ParamMap base = merge_config(o, true);

  if (sweep_text.empty()) {
    auto [params, drive] = validate_config(base);
    emit_output(o, emit_spectrum(semiclassical_spectrum(drive, params, orders, regime), format_of(o)));
    return 0;
  }

  const Sweep sweep = parse_sweep(sweep_text);
  std::vector<PeakSpectrum> results(sweep.values.size());
  std::vector<std::string> errors(sweep.values.size());
  const int cap = thread_cap();
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= sweep.values.size()) return;
        i = next++;
      }
      try {
        ParamMap map = base;
        map[sweep.key] = sweep.values[i];
        auto [params, drive] = validate_config(map);
        results[i] = semiclassical_spectrum(drive, params, orders, regime);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(cap, static_cast<int>(sweep.values.size())); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (!err.empty()) throw ValidationError(err);
  }

  // single writer, sorted parameter order
  if (format_of(o) == EmitFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
      nlohmann::json entry;
      entry[sweep.key] = sweep.values[i];
      entry["spectrum"] = nlohmann::json::parse(emit_spectrum(results[i], EmitFormat::Json));
      arr.push_back(entry);
    }
    emit_output(o, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << sweep.key << ",p,side,frequency,re_amp,im_amp,intensity\n";
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
      for (const auto& rec : results[i].records) {
        os << format_double(sweep.values[i]) << ',' << rec.p << ',' << side_name(rec.side) << ','
           << format_double(rec.frequency) << ',' << format_double(rec.amplitude.real()) << ','
           << format_double(rec.amplitude.imag()) << ',' << format_double(rec.intensity) << '\n';
      }
    }
    emit_output(o, os.str());
  }
  return 0;
}

int cmd_oracle(const CommonOpts& o, const IntegrationOptions& opts) {
  auto [params, drive] = validate_config(merge_config(o, true));
  const Trajectory traj = integrate_bloch(drive, params, opts);
  if (format_of(o) == EmitFormat::Json) {
    nlohmann::json j;
    j["t"] = traj.times;
    std::vector<double> re, im, sz;
    for (const auto& s : traj.states) {
      re.push_back(s.s_minus.real());
      im.push_back(s.s_minus.imag());
      sz.push_back(s.s_z);
    }
    j["re_sminus"] = re;
    j["im_sminus"] = im;
    j["sz"] = sz;
    emit_output(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    emit_output(o, os.str());
  }
  return 0;
}

int cmd_quantum(const CommonOpts& o, double alpha2, double beta2, double phase_a, double phase_b,
                const std::string& channel_name, int orders, double tail_bound, bool ideal_pass) {
  auto [params, drive] = validate_config(merge_config(o, false));
  PeakChannel channel = PeakChannel::Reflected;
  if (channel_name == "e") channel = PeakChannel::EMode;
  if (channel_name == "t") channel = PeakChannel::Transmitted;

  CoherentDrive coh{alpha2, beta2, phase_a, phase_b};
  TruncationPolicy trunc;
  trunc.tail_bound = tail_bound;

  std::ostringstream os;
  const bool json = format_of(o) == EmitFormat::Json;
  nlohmann::json arr = nlohmann::json::array();
  if (!json) os << "p,side,channel,re_M,im_M,abs2_M,J_classical,tail_estimate\n";
  for (int p = 1; p <= orders; ++p) {
    for (Side side : {Side::Right, Side::Left}) {
      const CoherentAmplitude amp =
          ideal_pass
              ? coherent_peak_amplitude(p, coh, channel, params, trunc, side)
              : coherent_peak_amplitude(p, coh, channel, params, trunc, side, drive.delta,
                                        std::nullopt);
      const double j_cl = classical_limit_J(p, alpha2, beta2, params, side);
      if (json) {
        nlohmann::json row;
        row["p"] = p;
        row["side"] = side_name(side);
        row["channel"] = channel_name;
        row["re_M"] = amp.value.real();
        row["im_M"] = amp.value.imag();
        row["abs2_M"] = std::norm(amp.value);
        row["J_classical"] = j_cl;
        row["tail_estimate"] = amp.tail_estimate;
        arr.push_back(row);
      } else {
        os << p << ',' << side_name(side) << ',' << channel_name << ','
           << format_double(amp.value.real()) << ',' << format_double(amp.value.imag()) << ','
           << format_double(std::norm(amp.value)) << ',' << format_double(j_cl) << ','
           << format_double(amp.tail_estimate) << '\n';
      }
    }
  }
  emit_output(o, json ? arr.dump(2) + "\n" : os.str());
  return 0;
}

int cmd_gamma(const CommonOpts& o, int p_max) {
  std::ostringstream os;
  for (int p = 0; p <= p_max; ++p) {
    const GammaValue g = extract_gamma(p);
    os << p << ", " << 2 * p + 1 << ", " << g.value << "\n";
  }
  emit_output(o, os.str());
  return 0;
}

int cmd_example222(const CommonOpts& o, double k_a_in, double k_b_in, double linewidth,
                   double grid_step, double grid_half_span) {
  auto [params, drive] = validate_config(merge_config(o, false));
  const double k_a = k_a_in > 0 ? k_a_in : params.k_res();
  const double k_b = k_b_in > 0 ? k_b_in : k_a + 0.2 * params.gamma / params.v;
  std::vector<double> grid;
  const int half = static_cast<int>(std::lround(grid_half_span / grid_step));
  grid.reserve(2 * half + 1);
  for (int i = -half; i <= half; ++i) grid.push_back(k_a + i * grid_step);

  const MomentumDistribution without_b = spectrum_222(grid, k_a, k_b, linewidth, params, false);
  const MomentumDistribution with_b = spectrum_222(grid, k_a, k_b, linewidth, params, true);

  if (format_of(o) == EmitFormat::Json) {
    nlohmann::json j;
    j["k"] = with_b.k_grid;
    j["intensity_without_B"] = without_b.intensity;
    j["intensity_with_B"] = with_b.intensity;
    emit_output(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "k,intensity_without_B,intensity_with_B\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << format_double(grid[i]) << ',' << format_double(without_b.intensity[i]) << ','
         << format_double(with_b.intensity[i]) << '\n';
    }
    emit_output(o, os.str());
  }
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  const auto results = run_acceptance();
  std::ostringstream os;
  const int failures = print_acceptance(os, results);
  emit_output(o, os.str());
  return failures == 0 ? 0 : 4;
}

int run(int argc, char** argv) {
  CLI::App app{"wavemix: wave-mixing spectra of a bichromatic drive on a two-level scatterer"};
  app.require_subcommand(1);

  CommonOpts sc_opts;
  int sc_orders = 3;
  std::string sc_regime = "full", sc_sweep;
  auto* sc = app.add_subcommand("semiclassical", "closed-form side-peak spectrum");
  add_common(sc, sc_opts, true);
  sc->add_option("--orders", sc_orders, "maximum peak order p")->check(CLI::NonNegativeNumber);
  sc->add_option("--regime", sc_regime, "full or weak")->check(CLI::IsMember({"full", "weak"}));
  sc->add_option("--sweep", sc_sweep, "key=lo:hi:n parameter sweep");

  CommonOpts or_opts;
  IntegrationOptions int_opts;
  auto* orc = app.add_subcommand("oracle", "Bloch-equation trajectory export");
  add_common(orc, or_opts, true);
  orc->add_option("--settle-periods", int_opts.settle_periods, "settle periods (0 = auto)");
  orc->add_option("--record-periods", int_opts.record_periods, "recorded periods");
  orc->add_option("--rel-tol", int_opts.rel_tol, "integrator relative tolerance");
  orc->add_option("--samples-per-period", int_opts.samples_per_period, "samples per beat period");

  CommonOpts q_opts;
  double q_alpha2 = 100.0, q_beta2 = 100.0, q_phase_a = 0.0, q_phase_b = 0.0, q_tail = 1e-9;
  int q_orders = 2;
  std::string q_channel = "r";
  bool q_ideal = true;
  auto* qu = app.add_subcommand("quantum", "coherent-drive side-peak amplitudes");
  add_common(qu, q_opts, true);
  qu->add_option("--alpha2", q_alpha2, "mean photon number of mode A");
  qu->add_option("--beta2", q_beta2, "mean photon number of mode B");
  qu->add_option("--phase-a", q_phase_a, "phase of alpha");
  qu->add_option("--phase-b", q_phase_b, "phase of beta");
  qu->add_option("--channel", q_channel, "e, t or r")->check(CLI::IsMember({"e", "t", "r"}));
  qu->add_option("--orders", q_orders, "maximum peak order p")->check(CLI::PositiveNumber);
  qu->add_option("--tail-bound", q_tail, "relative truncation tail bound");
  qu->add_flag("--ideal-pass,!--detuned-pass", q_ideal,
               "unit spectator coefficients (default) vs channel coefficients at +-delta");

  CommonOpts g_opts;
  int g_pmax = 3;
  auto* ga = app.add_subcommand("gamma", "integer loop coefficients gamma^(2p+1)");
  ga->add_option("--p-max", g_pmax, "largest loop order")->check(CLI::Range(0, 6));
  ga->add_option("--output,-o", g_opts.output_path, "output path (default: stdout)");

  CommonOpts e_opts;
  double e_ka = 0.0, e_kb = 0.0, e_w = 0.004, e_step = 0.002, e_span = 1.4;
  auto* ex = app.add_subcommand("example222", "two A photons with two B spectators");
  add_common(ex, e_opts, false);
  ex->add_option("--k-a", e_ka, "mode-A momentum (default: resonant)");
  ex->add_option("--k-b", e_kb, "mode-B momentum (default: k_a + 0.2 Gamma/v)");
  ex->add_option("--linewidth", e_w, "Lorentzian HWHM Delta k");
  ex->add_option("--grid-step", e_step, "momentum grid step");
  ex->add_option("--grid-half-span", e_span, "grid half width about k_a");

  CommonOpts v_opts;
  auto* ve = app.add_subcommand("verify", "run the full invariant suite");
  ve->add_option("--output,-o", v_opts.output_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  if (sc->parsed()) return cmd_semiclassical(sc_opts, sc_orders, sc_regime, sc_sweep);
  if (orc->parsed()) return cmd_oracle(or_opts, int_opts);
  if (qu->parsed())
    return cmd_quantum(q_opts, q_alpha2, q_beta2, q_phase_a, q_phase_b, q_channel, q_orders, q_tail,
                       q_ideal);
  if (ga->parsed()) return cmd_gamma(g_opts, g_pmax);
  if (ex->parsed()) return cmd_example222(e_opts, e_ka, e_kb, e_w, e_step, e_span);
  if (ve->parsed()) return cmd_verify(v_opts);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const wavemix::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const wavemix::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
