#include "wavemix/bloch.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <ostream>

#include "wavemix/emit.hpp"

namespace wavemix {

namespace {

using OdeState = std::array<double, 3>;  // re s^-, im s^-, s_z

struct BlochRhs {
  double gamma, rabi_a, rabi_b, delta;

  void operator()(const OdeState& y, OdeState& dydt, double t) const {
    const Complex sm{y[0], y[1]};
    const double sz = y[2];
    const Complex drive = rabi_a * std::polar(1.0, -delta * t) + rabi_b * std::polar(1.0, delta * t);
    const Complex dsm = -0.5 * gamma * sm + Complex{0.0, 0.5} * drive * sz;
    const Complex pump = std::conj(drive) * sm - drive * std::conj(sm);
    dydt[0] = dsm.real();
    dydt[1] = dsm.imag();
    dydt[2] = -gamma * (sz + 1.0) + (Complex{0.0, 1.0} * pump).real();
  }
};

void check_bloch_ball(const BlochState& s, double t) {
  const double slack = 1e-9;
  if (std::norm(s.s_minus) > 0.25 * (1.0 - s.s_z * s.s_z) + slack)
    throw NumericalError("integrator accuracy: Bloch-ball containment violated at t = " +
                         format_double(t));
}

}  // namespace

Trajectory integrate_bloch(const DriveConfig& drive, const SystemParams& params,
                           const IntegrationOptions& opts) {
  if (!(params.gamma > 0) || !(drive.delta > 0)) throw ValidationError("gamma and delta must be positive");
  if (opts.rel_tol < 1e-12 || opts.rel_tol > 1e-6)
    throw ValidationError("rel_tol must lie in [1e-12, 1e-6]");
  if (opts.samples_per_period < 2048 || opts.samples_per_period % 2 != 0)
    throw ValidationError("samples_per_period must be even and >= 2048");
  if (opts.record_periods < 1) throw ValidationError("record_periods must be >= 1");

  const double period = 2.0 * std::numbers::pi / drive.delta;
  int settle = opts.settle_periods;
  if (settle <= 0) {
    // transients decay on 1/Gamma; demand >= 10/Gamma of settling and >= 3 beats
    settle = std::max(3, static_cast<int>(std::ceil(10.0 / (params.gamma * period))));
  }

  Trajectory traj;
  traj.params = params;
  traj.drive = drive;
  traj.samples_per_period = opts.samples_per_period;
  traj.record_periods = opts.record_periods;

  const double t_start = settle * period;
  const double t_end = (settle + opts.record_periods) * period;
  const std::size_t n_samples =
      static_cast<std::size_t>(opts.samples_per_period) * opts.record_periods + 1;
  const double h = (t_end - t_start) / static_cast<double>(n_samples - 1);

  namespace ode = boost::numeric::odeint;
  BlochRhs rhs{params.gamma, drive.rabi_a, drive.rabi_b, drive.delta};
  auto stepper = ode::make_dense_output(1e-12, opts.rel_tol, ode::runge_kutta_dopri5<OdeState>());

  OdeState y{0.0, 0.0, -1.0};
  const double dt0 = std::min(0.1 / params.gamma, 0.01 * period);
  stepper.initialize(y, 0.0, dt0);

  traj.times.reserve(n_samples);
  traj.states.reserve(n_samples);
  std::size_t next_sample = 0;
  const double min_step = 1e-14 * std::max(1.0, t_end);
  while (next_sample < n_samples) {
    const double t_target = t_start + static_cast<double>(next_sample) * h;
    while (stepper.current_time() < t_target) {
      if (std::abs(stepper.current_time_step()) < min_step)
        throw NumericalError("integration failure: step size underflow at t = " +
                             format_double(stepper.current_time()));
      stepper.do_step(rhs);
    }
    OdeState sampled;
    stepper.calc_state(t_target, sampled);
    BlochState state{Complex{sampled[0], sampled[1]}, sampled[2]};
    check_bloch_ball(state, t_target);
    traj.times.push_back(t_target);
    traj.states.push_back(state);
    ++next_sample;
  }
  return traj;
}

Trajectory integrate_bloch(const DriveConfig& drive, const SystemParams& params, int settle_periods,
                           int record_periods, double rel_tol) {
  IntegrationOptions opts;
  opts.settle_periods = settle_periods;
  opts.record_periods = record_periods;
  opts.rel_tol = rel_tol;
  return integrate_bloch(drive, params, opts);
}

std::vector<Complex> extract_harmonics(const Trajectory& traj, const std::vector<int>& orders) {
  const std::size_t n = traj.times.size();
  if (n < 3 || traj.states.size() != n) throw ValidationError("trajectory is empty or inconsistent");
  const std::size_t intervals = n - 1;
  const std::size_t expected =
      static_cast<std::size_t>(traj.samples_per_period) * std::max(traj.record_periods, 1);
  if (intervals != expected || intervals % 2 != 0)
    throw ValidationError("trajectory window does not span an integer number of periods");

  const double h = traj.times[1] - traj.times[0];
  const double window = static_cast<double>(intervals) * h;
  std::vector<Complex> out;
  out.reserve(orders.size());
  for (int order : orders) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      const double phase = -order * traj.drive.delta * traj.times[i];
      acc += w * traj.states[i].s_minus * std::polar(1.0, phase);
    }
    out.push_back(acc * (h / 3.0) / window);
  }
  return out;
}

Complex side_peak_harmonic(const Trajectory& traj, int p, Side side) {
  if (p < 0) throw ValidationError("peak order p must be >= 0");
  const int literal = side == Side::Right ? -(2 * p + 1) : (2 * p + 1);
  return extract_harmonics(traj, {literal}).front();
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,re_sminus,im_sminus,sz\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    os << format_double(traj.times[i]) << ',' << format_double(traj.states[i].s_minus.real()) << ','
       << format_double(traj.states[i].s_minus.imag()) << ',' << format_double(traj.states[i].s_z)
       << '\n';
  }
}

}  // namespace wavemix
