#pragma once

#include "wavemix/core.hpp"

namespace wavemix {

// Saturation mixing angle of the bichromatic steady state.
//
// sin(theta) = Oa*Ob / (G^2/4 + (Oa^2+Ob^2)/2), theta in [0, pi/2),
// y = -tan(theta/2).  The quotient sin(theta)/(4*Oa*Ob) appears in every
// downstream formula; it is stored in the algebraically cancelled form
// 1/(G^2 + 2*Oa^2 + 2*Ob^2) so that Oa*Ob -> 0 stays non-singular.
struct MixingAngle {
  double theta = 0.0;
  double y = 0.0;
  double sin_theta = 0.0;
  double quotient = 0.0;  // sin(theta)/(4*Oa*Ob) == 1/(G^2+2Oa^2+2Ob^2)
};

MixingAngle mixing_angle(const DriveConfig& drive, const SystemParams& params);

enum class SigmaForm { Closed, Series };

// Quasi-stationary <sigma^-> at time t (frame rotating at omega01).
// Closed form:   -G * quotient * (Oa e^{i d t} + Ob e^{-i d t}) / (1 + sin(theta) cos(2 d t))
// Series form:   -G * quotient/cos(theta) * (Oa e^{i d t} + Ob e^{-i d t}) * sum_{|p|<=P} y^|p| e^{2 i p d t}
Complex sigma_minus(const DriveConfig& drive, const SystemParams& params, double t,
                    SigmaForm form = SigmaForm::Closed, int p_max = 0);

enum class DriveRegime { Full, Weak };

// Amplitude of the (2p+1)-th side peak (p = 0 gives the principal peaks).
// Full:  (-1)^p G^2 tan(theta) tan^p(theta/2)/(4 Oa Ob) * { Ob tan(theta/2) - Oa   (right)
//                                                         { Oa tan(theta/2) - Ob   (left)
// Weak:  (-1)^{p+1} (2^p/G^{2p}) * Oa^{p+1} Ob^p (right) / Oa^p Ob^{p+1} (left)
Complex side_peak_amplitude(const DriveConfig& drive, const SystemParams& params, int p, Side side,
                            DriveRegime regime = DriveRegime::Full);

// N^{(2p+1)} = Na^{p+1} Nb^p (right) or Na^p Nb^{p+1} (left), with N = sqrt(2)|Omega|/G.
double peak_photon_number(double n_a, double n_b, int p, Side side);

// Records for p = 0..max_p on both sides, sorted by frequency.
PeakSpectrum semiclassical_spectrum(const DriveConfig& drive, const SystemParams& params, int max_p,
                                    DriveRegime regime = DriveRegime::Full);

}  // namespace wavemix
