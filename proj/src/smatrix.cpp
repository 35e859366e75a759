#include "wavemix/smatrix.hpp"

#include <cmath>
#include <numbers>

namespace wavemix {

std::pair<Complex, Complex> chirality_rotate(Complex amp_r, Complex amp_l, ChiralityDirection dir) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  // the same orthogonal map inverts itself; the direction tag documents intent
  (void)dir;
  return {(amp_r + amp_l) * inv_sqrt2, (amp_r - amp_l) * inv_sqrt2};
}

ScatterCoeffs single_photon_coeffs(double k, const SystemParams& params) {
  const Complex keps = params.k_eps();
  ScatterCoeffs c;
  c.t_tilde = (k - std::conj(keps)) / (k - keps);
  const Complex den = params.v * k - params.omega01 + Complex{0.0, 0.5 * params.gamma};
  c.t = (params.v * k - params.omega01) / den;
  c.r = Complex{0.0, -0.5 * params.gamma} / den;
  return c;
}

ConnectedAmplitude two_photon_connected(double p1, double p2, double k1, double k2,
                                        const SystemParams& params, TwoPhotonBasis basis) {
  const Complex keps = params.k_eps();
  const double g = params.gamma, v = params.v;
  const Complex num = (k1 + k2) - 2.0 * keps;
  const Complex den = (keps - k1) * (keps - k2) * (keps - p1) * (keps - p2);
  Complex coeff = Complex{0.0, 1.0} * (g * g / (std::numbers::pi * v * v)) * num / den;
  if (basis == TwoPhotonBasis::RL) coeff /= 4.0;
  return ConnectedAmplitude{coeff, k1 + k2, 2};
}

}  // namespace wavemix
