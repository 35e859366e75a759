#pragma once

#include <iosfwd>
#include <vector>

#include "wavemix/core.hpp"

namespace wavemix {

struct BlochState {
  Complex s_minus{0.0, 0.0};
  double s_z = -1.0;
};

// Steady-state window of the driven, damped two-level dynamics, sampled on
// a uniform grid spanning an integer number of beat periods 2*pi/delta.
struct Trajectory {
  std::vector<double> times;
  std::vector<BlochState> states;
  SystemParams params;
  DriveConfig drive;
  int samples_per_period = 0;
  int record_periods = 0;
};

struct IntegrationOptions {
  int settle_periods = 0;        // 0 -> automatic: >= 10/Gamma and >= 3 periods
  int record_periods = 1;
  double rel_tol = 1e-9;         // accepted range [1e-12, 1e-6]
  int samples_per_period = 4096; // >= 2048, even
};

// Integrates, in the frame rotating at omega01 with drive
// Omega(t) = rabi_a e^{-i delta t} + rabi_b e^{+i delta t}:
//   d s^-/dt = -(Gamma/2) s^- + (i/2) Omega(t) s_z
//   d s_z/dt = -Gamma (s_z + 1) + i (conj(Omega) s^- - Omega conj(s^-))
// from the ground state, discarding the settle window.  The rotating-frame
// phase convention maps onto the quasi-stationary closed form via
// s^-(t) <-> i * conj(sigma_closed(t)); fixed once against the p = 0
// harmonics and kept frozen.
Trajectory integrate_bloch(const DriveConfig& drive, const SystemParams& params,
                           const IntegrationOptions& opts = {});
Trajectory integrate_bloch(const DriveConfig& drive, const SystemParams& params, int settle_periods,
                           int record_periods, double rel_tol);

// Fourier coefficients c_n = (1/T) Int s^-(t) e^{-i n delta t} dt over the
// recorded window (composite Simpson on the uniform grid).  Literal
// coefficients of the integrated trajectory; no relabeling applied.
std::vector<Complex> extract_harmonics(const Trajectory& traj, const std::vector<int>& orders);

// Frozen labeling calibrated on the p = 0 harmonics: the right-side peak
// family omega01 + (2p+1) delta lives at literal index -(2p+1).
Complex side_peak_harmonic(const Trajectory& traj, int p, Side side);

// CSV columns: t, re_sminus, im_sminus, sz
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace wavemix
