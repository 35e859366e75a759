#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavemix {

using Complex = std::complex<double>;

// Exit-code classes used by the CLI: validation -> 3, numerical -> 4.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two-level scatterer in a 1D line, hbar = 1.  All frequencies carry the
// same (arbitrary) unit; every dimensionless output depends only on ratios.
struct SystemParams {
  double omega01 = 10.0;  // transition frequency eps/hbar
  double gamma = 1.0;     // radiative relaxation rate
  double v = 1.0;         // photon speed

  // eps/hbar - i*Gamma/2, the dressed pole of the scatterer
  Complex omega_eps() const { return {omega01, -0.5 * gamma}; }
  // k_eps = omega_eps / v
  Complex k_eps() const { return omega_eps() / v; }
  // resonant momentum
  double k_res() const { return omega01 / v; }
};

// Bichromatic drive: omega_A = omega01 + delta, omega_B = omega01 - delta.
struct DriveConfig {
  double rabi_a = 0.0;
  double rabi_b = 0.0;
  double delta = 0.0;
  // set when delta/gamma > 0.1; the quasi-stationary closed forms degrade
  // smoothly, so this is a warning flag, not an error
  bool quasistationary_strained = false;
};

enum class Side { Right, Left };

inline const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

// One coherent spectral component at omega01 +/- (2p+1)*delta.
// p = 0 records are the two principal (drive-frequency) peaks.
struct PeakRecord {
  int p = 0;
  Side side = Side::Right;
  double frequency = 0.0;
  Complex amplitude{0.0, 0.0};
  double intensity = 0.0;  // |amplitude|^2
};

struct PeakSpectrum {
  std::vector<PeakRecord> records;  // kept sorted by frequency
};

double peak_frequency(const SystemParams& params, const DriveConfig& drive, int p, Side side);

void sort_by_frequency(PeakSpectrum& spec);

using ParamMap = std::map<std::string, double>;

// Validates {omega01, gamma, rabi_a, rabi_b, delta[, v]}; unknown keys rejected.
std::pair<SystemParams, DriveConfig> validate_config(const ParamMap& raw);

// JSON config round trip.  Keys exactly {"omega01","gamma","v","rabi_a","rabi_b","delta"}.
ParamMap parse_config_json(const std::string& text);
std::string config_to_json(const SystemParams& params, const DriveConfig& drive);

}  // namespace wavemix
