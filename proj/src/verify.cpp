#include "wavemix/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "wavemix/bloch.hpp"
#include "wavemix/coherent.hpp"
#include "wavemix/diagrams.hpp"
#include "wavemix/multiphoton.hpp"
#include "wavemix/semiclassical.hpp"
#include "wavemix/smatrix.hpp"

namespace wavemix {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& msg) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << msg;
    }
  }
};

SystemParams default_params() {
  SystemParams p;
  p.omega01 = 10.0;
  p.gamma = 1.0;
  p.v = 1.0;
  return p;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CriterionResult criterion_gamma_table() {
  Check c;
  const long long expected[] = {1, 2, -6, -20};
  std::ostringstream got;
  for (int p = 0; p <= 3; ++p) {
    const GammaValue g = extract_gamma(p);
    got << (p ? "," : "") << g.value;
    c.require(g.value == BigRat(expected[p]),
              "gamma(" + std::to_string(p) + ") = " + g.value.str() + " != " +
                  std::to_string(expected[p]));
  }
  c.detail << (c.ok ? "table {" + got.str() + "}, p=0,1 calibrated, p=2,3 predicted" : "");
  CriterionResult r{1, "gamma table {1,2,-6,-20}, integer equality", c.ok, c.detail.str(), 0};
  return r;
}

CriterionResult criterion_interaction_lengths() {
  Check c;
  const double expected[] = {1.0, std::numbers::sqrt2, std::pow(5.0, 1.0 / 3.0)};
  for (int p = 1; p <= 3; ++p) {
    const double got = interaction_length_ratio(p);
    c.require(std::abs(got - expected[p - 1]) <= 1e-12,
              "L ratio p=" + std::to_string(p) + ": " + fmt(got));
  }
  if (c.ok) c.detail << "ratios 1, sqrt2, 5^(1/3) to 1e-12";
  return {2, "interaction length ratios", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_cross_derivation() {
  Check c;
  const SystemParams params = default_params();
  const double k_res = params.k_res();
  const double t1 = connected_T(1, params);
  const Complex t2 =
      two_photon_connected(k_res, k_res, k_res, k_res, params, TwoPhotonBasis::EMode).coefficient;
  const double expected = -16.0 * params.v / (std::numbers::pi * params.gamma);
  c.require(std::abs(t1 - expected) <= 1e-12 * std::abs(expected),
            "connected_T(1) = " + fmt(t1));
  c.require(std::abs(t2 - expected) <= 1e-12 * std::abs(expected),
            "resonant two-photon coefficient = " + fmt(t2.real()) + "+" + fmt(t2.imag()) + "i");
  const double t0 = connected_T(0, params);
  const Complex t1_single =
      Complex{0.0, -params.gamma} / (params.v * (k_res - params.k_eps()));
  c.require(std::abs(t0 + 2.0) <= 1e-12, "connected_T(0) = " + fmt(t0));
  c.require(std::abs(t1_single - Complex{-2.0, 0.0}) <= 1e-12, "resonant single-photon iT");
  if (c.ok) c.detail << "connected_T(1) = -16 v/(pi Gamma) = resonant two-photon; connected_T(0) = -2";
  return {3, "cross-derivation identities", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_unitarity() {
  Check c;
  const SystemParams params = default_params();
  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  double worst_unitarity = 0.0, worst_phase = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double k = params.k_res() + u(rng);
    const ScatterCoeffs sc = single_photon_coeffs(k, params);
    worst_unitarity = std::max(worst_unitarity,
                               std::abs(std::norm(sc.t) + std::norm(sc.r) - 1.0));
    worst_phase = std::max(worst_phase, std::abs(std::abs(sc.t_tilde) - 1.0));
  }
  c.require(worst_unitarity <= 1e-12, "max |t|^2+|r|^2 error " + fmt(worst_unitarity));
  c.require(worst_phase <= 1e-12, "max ||t~|-1| " + fmt(worst_phase));
  const ScatterCoeffs res = single_photon_coeffs(params.k_res(), params);
  c.require(std::abs(res.t) <= 1e-12 && std::abs(res.r + 1.0) <= 1e-12, "resonance t=0, r=-1");
  if (c.ok)
    c.detail << "1000 momenta, worst errors " << fmt(worst_unitarity) << ", " << fmt(worst_phase);
  return {4, "single-photon unitarity", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_oracle_equivalence() {
  Check c;
  const SystemParams params = default_params();
  const double deltas[] = {0.1, 0.03, 0.01};
  std::array<std::array<double, 3>, 3> devs{};  // [delta][p]
  for (int di = 0; di < 3; ++di) {
    DriveConfig drive;
    drive.rabi_a = drive.rabi_b = 0.5;
    drive.delta = deltas[di];
    IntegrationOptions opts;
    opts.rel_tol = 1e-10;
    const Trajectory traj = integrate_bloch(drive, params, opts);
    for (int p = 0; p <= 2; ++p) {
      const double oracle = std::abs(side_peak_harmonic(traj, p, Side::Right));
      const double closed =
          std::abs(side_peak_amplitude(drive, params, p, Side::Right)) / params.gamma;
      devs[di][p] = std::abs(oracle - closed) / closed;
    }
  }
  for (int p = 0; p <= 2; ++p) {
    c.require(devs[2][p] <= 0.02,
              "p=" + std::to_string(p) + " deviation " + fmt(devs[2][p]) + " at delta=0.01");
    c.require(devs[0][p] > devs[1][p] && devs[1][p] > devs[2][p],
              "p=" + std::to_string(p) + " deviation not monotone in delta");
  }
  c.detail << "deviations at delta {0.1,0.03,0.01}: p=0 {" << fmt(devs[0][0]) << "," << fmt(devs[1][0])
           << "," << fmt(devs[2][0]) << "}, p=1 {" << fmt(devs[0][1]) << "," << fmt(devs[1][1]) << ","
           << fmt(devs[2][1]) << "}, p=2 {" << fmt(devs[0][2]) << "," << fmt(devs[1][2]) << ","
           << fmt(devs[2][2]) << "}";
  return {5, "Bloch oracle vs closed form (2%, monotone)", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_series_identity() {
  Check c;
  const SystemParams params = default_params();
  double worst = 0.0;
  // |y| = 0.5 at rabi_a = rabi_b = Gamma; smaller drives give smaller |y|
  const double rabis[][2] = {{1.0, 1.0}, {0.5, 0.5}, {0.8, 0.3}};
  for (const auto& r : rabis) {
    DriveConfig drive;
    drive.rabi_a = r[0];
    drive.rabi_b = r[1];
    drive.delta = 0.01;
    const double period = 2 * std::numbers::pi / drive.delta;
    for (int i = 0; i < 64; ++i) {
      const double t = period * i / 64.0;
      const Complex closed = sigma_minus(drive, params, t, SigmaForm::Closed);
      const Complex series = sigma_minus(drive, params, t, SigmaForm::Series, 40);
      worst = std::max(worst, std::abs(closed - series));
    }
  }
  c.require(worst <= 1e-10, "max |closed - series(40)| = " + fmt(worst));
  if (c.ok) c.detail << "max deviation " << fmt(worst) << " over drives with |y| <= 0.5";
  return {6, "Fourier series vs closed form at P_max=40", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_combinatorics_oracle() {
  Check c;
  for (int p = 0; p <= 2; ++p) {
    for (int n_a = p + 1; n_a <= 6; ++n_a) {
      for (int n_b = 0; n_b <= 6; ++n_b) {
        const BigRat sym = derivative_prefactor(n_a, n_b, p, PrefactorMode::Sym);
        const BigRat nonsym = derivative_prefactor(n_a, n_b, p, PrefactorMode::Nonsym);
        const BigRat sym_expected = factorial_rat(n_a) * factorial_rat(n_b + p) / (p + 1);
        const BigRat nonsym_expected =
            factorial_rat(n_a) * factorial_rat(p + 1) * factorial_rat(n_b) / (p + 1);
        c.require(sym == sym_expected, "sym mismatch at (" + std::to_string(n_a) + "," +
                                           std::to_string(n_b) + "," + std::to_string(p) + ")");
        c.require(nonsym == nonsym_expected, "nonsym mismatch at (" + std::to_string(n_a) + "," +
                                                 std::to_string(n_b) + "," + std::to_string(p) + ")");
        c.require(sym / nonsym == stimulation_ratio(p, n_b), "ratio mismatch");
      }
    }
  }
  c.require(stimulation_ratio(1, 2) == BigRat(3, 2), "p=1, n_b=2 ratio != 3/2");
  if (c.ok) c.detail << "exact over n_a <= 6, n_b <= 6, p <= 2; ratio p=1,n_b=2 = 3/2";
  return {7, "generating-functional combinatorics oracle", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_weak_drive() {
  Check c;
  const SystemParams params = default_params();
  DriveConfig drive;
  drive.rabi_a = drive.rabi_b = 1e-3;
  drive.delta = 0.01;
  for (int p = 0; p <= 3; ++p) {
    for (Side side : {Side::Right, Side::Left}) {
      const Complex full = side_peak_amplitude(drive, params, p, side, DriveRegime::Full);
      const Complex weak = side_peak_amplitude(drive, params, p, side, DriveRegime::Weak);
      const double ratio = std::abs(full / weak);
      c.require(std::abs(ratio - 1.0) <= 0.01,
                "full/weak p=" + std::to_string(p) + " ratio " + fmt(ratio));
      const double n_a = std::numbers::sqrt2 * drive.rabi_a / params.gamma;
      const double n_b = std::numbers::sqrt2 * drive.rabi_b / params.gamma;
      const double lhs = std::numbers::sqrt2 * std::abs(weak) / params.gamma;
      const double rhs = peak_photon_number(n_a, n_b, p, side);
      c.require(std::abs(lhs - rhs) <= 1e-12 * std::max(rhs, 1e-300),
                "N-relation p=" + std::to_string(p));
    }
  }
  if (c.ok) c.detail << "full/weak -> 1 within 1% and N^(2p+1) identity to 1e-12, p <= 3";
  return {8, "weak drive limit and photon-number relation", c.ok, c.detail.str(), 0};
}

double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult criterion_classical_scaling() {
  Check c;
  const SystemParams params = default_params();
  const std::vector<double> means = {50, 80, 110, 140, 170, 200};
  for (int p : {1, 2}) {
    std::vector<double> la, lya, lb, lyb;
    for (double m : means) {
      CoherentDrive da{m, 100.0, 0.0, 0.0};
      la.push_back(std::log(m));
      lya.push_back(2.0 * std::log(std::abs(
          coherent_peak_amplitude(p, da, PeakChannel::EMode, params).value)));
      CoherentDrive db{100.0, m, 0.0, 0.0};
      lb.push_back(std::log(m));
      lyb.push_back(2.0 * std::log(std::abs(
          coherent_peak_amplitude(p, db, PeakChannel::EMode, params).value)));
    }
    const double slope_a = fitted_slope(la, lya);
    const double slope_b = fitted_slope(lb, lyb);
    const double tol = p == 1 ? 0.05 : 0.10;
    c.require(std::abs(slope_a - (p + 1)) <= tol * (p + 1),
              "p=" + std::to_string(p) + " alpha2 slope " + fmt(slope_a) + " (target " +
                  std::to_string(p + 1) + ")");
    c.require(std::abs(slope_b - p) <= tol * p,
              "p=" + std::to_string(p) + " beta2 slope " + fmt(slope_b) + " (target " +
                  std::to_string(p) + ")");
  }
  if (!c.ok)
    c.detail << " -- known failure: the literal coherent amplitude sum has exact asymptotic "
                "exponents p+3/2 and p+1/2 (the sqrt-of-Poisson width factors (4 pi <N>)^(1/4) "
                "shift each fitted slope by +1/2); the delta-concentrated classical intensity "
                "with clean exponents is classical_limit_J";
  return {9, "classical-limit scaling exponents of |M|^2", c.ok, c.detail.str(), 0};
}

CriterionResult criterion_fig5_structure() {
  Check c;
  const SystemParams params = default_params();
  const double k_a = params.k_res();
  const double k_b = k_a + 0.2;
  const double k2 = 2 * k_a - k_b;
  const double w = 0.004;
  // symmetric uniform grid about k_a containing k_b and k2 exactly
  const double step = 0.002;
  const int half = 700;  // span +-1.4 around k_a
  std::vector<double> grid;
  for (int i = -half; i <= half; ++i) grid.push_back(k_a + i * step);

  const MomentumDistribution with_b = spectrum_222(grid, k_a, k_b, w, params, true);
  const MomentumDistribution without_b = spectrum_222(grid, k_a, k_b, w, params, false);

  // exactly two local maxima rising clearly above the broadened background
  // (the Lorentzian tails lift the whole curve slightly, so "exceeding" is
  // read as exceeding by at least 2x; the stimulated peaks exceed by ~(3/2)L(0))
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < with_b.intensity.size(); ++i) {
    if (with_b.intensity[i] > with_b.intensity[i - 1] &&
        with_b.intensity[i] > with_b.intensity[i + 1] &&
        with_b.intensity[i] > 2.0 * without_b.intensity[i]) {
      peaks.push_back(i);
    }
  }
  c.require(peaks.size() == 2, "found " + std::to_string(peaks.size()) + " stimulated maxima");
  if (peaks.size() == 2) {
    const double kp1 = with_b.k_grid[peaks[0]], kp2 = with_b.k_grid[peaks[1]];
    c.require(std::abs(kp1 - std::min(k_b, k2)) <= step && std::abs(kp2 - std::max(k_b, k2)) <= step,
              "maxima not at k_b and 2k_a-k_b");
    // peak/background at k_b = (3/2) * (L(0) + L(|k_b - k2|))
    std::size_t ib = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (std::abs(grid[i] - k_b) < std::abs(grid[ib] - k_b)) ib = i;
    }
    c.require(std::abs(grid[ib] - k_b) <= 0.25 * step, "k_b not on grid");
    const double lor0 = (w / std::numbers::pi) / (w * w);
    const double d12 = std::abs(k_b - k2);
    const double lor_far = (w / std::numbers::pi) / (d12 * d12 + w * w);
    const double expected_ratio = 1.5 * (lor0 + lor_far);
    const double measured_ratio = with_b.intensity[ib] / without_b.intensity[ib];
    c.require(std::abs(measured_ratio - expected_ratio) <= 1e-9 * expected_ratio,
              "peak/background ratio " + fmt(measured_ratio) + " vs " + fmt(expected_ratio));
  }

  // spectator-free distribution symmetric about k_a
  double worst_sym = 0.0;
  const std::size_t n = without_b.intensity.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double a = without_b.intensity[i], b = without_b.intensity[n - 1 - i];
    worst_sym = std::max(worst_sym, std::abs(a - b) / std::max(std::abs(a), 1e-300));
  }
  c.require(worst_sym <= 1e-12, "mirror asymmetry " + fmt(worst_sym));
  if (c.ok)
    c.detail << "two stimulated maxima at k_b, 2k_a-k_b with ratio (3/2)L(0); mirror symmetric "
                "without spectators";
  return {10, "two-photon-with-spectators momentum distribution", c.ok, c.detail.str(), 0};
}

template <typename F>
CriterionResult timed(F&& f, double budget_seconds) {
  const auto start = Clock::now();
  CriterionResult r = f();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && r.seconds > budget_seconds) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("runtime ") + fmt(r.seconds) +
                " s exceeds budget " + fmt(budget_seconds) + " s";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(timed(criterion_gamma_table, 60.0));
  out.push_back(timed(criterion_interaction_lengths, 0.0));
  out.push_back(timed(criterion_cross_derivation, 0.0));
  out.push_back(timed(criterion_unitarity, 0.0));
  out.push_back(timed(criterion_oracle_equivalence, 30.0));
  out.push_back(timed(criterion_series_identity, 0.0));
  out.push_back(timed(criterion_combinatorics_oracle, 0.0));
  out.push_back(timed(criterion_weak_drive, 0.0));
  out.push_back(timed(criterion_classical_scaling, 60.0));
  out.push_back(timed(criterion_fig5_structure, 0.0));
  return out;
}

int print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << " (" << fmt(r.seconds) << " s)\n";
    if (!r.pass) ++failures;
  }
  return failures;
}

}  // namespace wavemix
