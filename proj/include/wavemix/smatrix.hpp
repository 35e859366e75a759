#pragma once

#include "wavemix/core.hpp"

namespace wavemix {

// Single-photon amplitudes.  t_tilde is the elastic phase of the even
// (scattering) chiral combination; t and r follow from the basis change:
//   t = (t_tilde + 1)/2,  r = (t_tilde - 1)/2,  |t|^2 + |r|^2 = 1.
struct ScatterCoeffs {
  Complex t;
  Complex r;
  Complex t_tilde;
};

enum class ChiralityDirection { ToEO, ToRL };

// (R, L) <-> (e, o) = ((R+L)/sqrt2, (R-L)/sqrt2); the map is an involution.
std::pair<Complex, Complex> chirality_rotate(Complex amp_r, Complex amp_l, ChiralityDirection dir);

// t_tilde(k) = (k - conj(k_eps))/(k - k_eps),
// t(k) = (vk - eps)/(vk - eps + iG/2), r(k) = (-iG/2)/(vk - eps + iG/2).
ScatterCoeffs single_photon_coeffs(double k, const SystemParams& params);

// On-shell connected coefficient together with the conservation constraint
// it multiplies: the distribution is coefficient * delta(sum_in - sum_out).
struct ConnectedAmplitude {
  Complex coefficient{0.0, 0.0};
  double conserved_total = 0.0;  // k1 + k2
  int order = 2;                 // photons participating
};

enum class TwoPhotonBasis { EMode, RL };

// Connected two-photon T coefficient,
//   i * (G^2/(pi v^2)) (k1 + k2 - 2 k_eps) / [(k_eps-k1)(k_eps-k2)(k_eps-p1)(k_eps-p2)],
// divided by 4 in the (R, L) basis.  Outs (p1, p2), ins (k1, k2).
ConnectedAmplitude two_photon_connected(double p1, double p2, double k1, double k2,
                                        const SystemParams& params,
                                        TwoPhotonBasis basis = TwoPhotonBasis::EMode);

}  // namespace wavemix
