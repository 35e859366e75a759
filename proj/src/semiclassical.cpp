#include "wavemix/semiclassical.hpp"

#include <cassert>
#include <cmath>

namespace wavemix {

MixingAngle mixing_angle(const DriveConfig& drive, const SystemParams& params) {
  const double oa = drive.rabi_a, ob = drive.rabi_b, g = params.gamma;
  MixingAngle m;
  m.quotient = 1.0 / (g * g + 2 * oa * oa + 2 * ob * ob);
  m.sin_theta = 4.0 * oa * ob * m.quotient;
  // AM-GM: G^2/4 + (Oa^2+Ob^2)/2 >= Oa*Ob with equality impossible for G > 0
  assert(m.sin_theta >= 0.0 && m.sin_theta < 1.0);
  m.theta = std::asin(m.sin_theta);
  m.y = -std::tan(0.5 * m.theta);
  return m;
}

Complex sigma_minus(const DriveConfig& drive, const SystemParams& params, double t, SigmaForm form,
                    int p_max) {
  const MixingAngle m = mixing_angle(drive, params);
  const double g = params.gamma, d = drive.delta;
  const Complex carrier = drive.rabi_a * std::polar(1.0, d * t) + drive.rabi_b * std::polar(1.0, -d * t);
  if (form == SigmaForm::Closed) {
    return -g * m.quotient * carrier / (1.0 + m.sin_theta * std::cos(2 * d * t));
  }
  if (p_max < 0) throw ValidationError("series form requires p_max >= 0");
  if (std::abs(m.y) >= 1.0) throw NumericalError("sigma_minus series undefined at |y| = 1");
  Complex comb{1.0, 0.0};  // p = 0 term
  double ypow = 1.0;
  for (int p = 1; p <= p_max; ++p) {
    ypow *= m.y;
    comb += ypow * (std::polar(1.0, 2 * p * d * t) + std::polar(1.0, -2 * p * d * t));
  }
  return -g * (m.quotient / std::cos(m.theta)) * carrier * comb;
}

Complex side_peak_amplitude(const DriveConfig& drive, const SystemParams& params, int p, Side side,
                            DriveRegime regime) {
  if (p < 0) throw ValidationError("peak order p must be >= 0");
  const double oa = drive.rabi_a, ob = drive.rabi_b, g = params.gamma;
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  if (regime == DriveRegime::Weak) {
    const double lead = side == Side::Right ? std::pow(oa, p + 1) * std::pow(ob, p)
                                            : std::pow(oa, p) * std::pow(ob, p + 1);
    return Complex{-sign * std::pow(2.0 / (g * g), p) * lead, 0.0};
  }
  const MixingAngle m = mixing_angle(drive, params);
  const double t2 = std::tan(0.5 * m.theta);
  const double bracket = side == Side::Right ? ob * t2 - oa : oa * t2 - ob;
  // tan(theta)/(4 Oa Ob) = quotient / cos(theta); finite since theta < pi/2
  const double value = sign * g * g * (m.quotient / std::cos(m.theta)) * std::pow(t2, p) * bracket;
  return Complex{value, 0.0};
}

double peak_photon_number(double n_a, double n_b, int p, Side side) {
  if (n_a < 0 || n_b < 0) throw ValidationError("photon numbers must be non-negative");
  if (p < 0) throw ValidationError("peak order p must be >= 0");
  return side == Side::Right ? std::pow(n_a, p + 1) * std::pow(n_b, p)
                             : std::pow(n_a, p) * std::pow(n_b, p + 1);
}

PeakSpectrum semiclassical_spectrum(const DriveConfig& drive, const SystemParams& params, int max_p,
                                    DriveRegime regime) {
  if (max_p < 0) throw ValidationError("max peak order must be >= 0");
  PeakSpectrum spec;
  for (int p = 0; p <= max_p; ++p) {
    for (Side side : {Side::Right, Side::Left}) {
      PeakRecord rec;
      rec.p = p;
      rec.side = side;
      rec.frequency = peak_frequency(params, drive, p, side);
      rec.amplitude = side_peak_amplitude(drive, params, p, side, regime);
      rec.intensity = std::norm(rec.amplitude);
      spec.records.push_back(rec);
    }
  }
  sort_by_frequency(spec);
  return spec;
}

}  // namespace wavemix
