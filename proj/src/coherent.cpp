#include "wavemix/coherent.hpp"

#include <cmath>
#include <numbers>

namespace wavemix {

double photon_number_pmf(double mean, long long n, PhotonStatistics model) {
  if (!(mean > 0)) throw ValidationError("mean photon number must be positive");
  if (n < 0) throw ValidationError("photon number must be >= 0");
  const double nn = static_cast<double>(n);
  if (model == PhotonStatistics::Poisson)
    return std::exp(nn * std::log(mean) - mean - std::lgamma(nn + 1.0));
  return std::exp(-0.5 * (nn - mean) * (nn - mean) / mean) / std::sqrt(2.0 * std::numbers::pi * mean);
}

namespace {

Complex ipow(Complex base, long long n) {
  Complex out{1.0, 0.0};
  for (long long k = 0; k < n; ++k) out *= base;
  return out;
}

int auto_cap(double mean) { return static_cast<int>(std::ceil(mean + 12.0 * std::sqrt(mean) + 30.0)); }

// One-mode partial sums of the factorized Fock series.  Returns the sum,
// the L1 mass of the retained terms, and an L1 tail estimate from the
// last retained term extended as a geometric series with the local ratio.
struct ModeSum {
  Complex sum{0.0, 0.0};
  double l1 = 0.0;
  double tail = 0.0;
};

ModeSum mode_sum_a(int p, double amp, Complex c, int n_max, double log_norm) {
  // sum_{N >= p+1} a^N / sqrt((N-p-1)!) * c^{N-p-1}, with e^{log_norm} folded in
  ModeSum out;
  if (amp == 0.0) return out;
  const double la = std::log(amp);
  double last = 0.0, prev = 0.0;
  for (int n = p + 1; n <= n_max; ++n) {
    const int m = n - p - 1;
    const double mag = std::exp(n * la - 0.5 * std::lgamma(m + 1.0) + log_norm);
    if (std::isinf(mag)) throw NumericalError("coherent sum overflow: alpha2 too large");
    out.sum += mag * ipow(c, m);
    out.l1 += mag * std::pow(std::abs(c), m);
    prev = last;
    last = mag;
  }
  if (last > 0.0 && prev > 0.0) {
    const double r = std::min(last / prev, 0.999);
    out.tail = last * r / (1.0 - r);
  } else {
    out.tail = last;
  }
  return out;
}

ModeSum mode_sum_b(int p, double amp, Complex c, int n_max, double log_norm) {
  // sum_{N >= 0} b^N sqrt((N+p)!)/N! * c^N, with e^{log_norm} folded in
  ModeSum out;
  const double lb = amp > 0.0 ? std::log(amp) : 0.0;
  double last = 0.0, prev = 0.0;
  for (int n = 0; n <= (amp > 0.0 ? n_max : 0); ++n) {
    const double mag =
        std::exp(n * lb + 0.5 * std::lgamma(n + p + 1.0) - std::lgamma(n + 1.0) + log_norm);
    if (std::isinf(mag)) throw NumericalError("coherent sum overflow: beta2 too large");
    out.sum += mag * ipow(c, n);
    out.l1 += mag * std::pow(std::abs(c), n);
    prev = last;
    last = mag;
  }
  if (last > 0.0 && prev > 0.0 && amp > 0.0) {
    const double r = std::min(last / prev, 0.999);
    out.tail = last * r / (1.0 - r);
  } else if (amp > 0.0) {
    out.tail = last;
  }
  return out;
}

}  // namespace

CoherentAmplitude coherent_peak_amplitude(int p, const CoherentDrive& drive, PeakChannel channel,
                                          const SystemParams& params, const TruncationPolicy& trunc,
                                          Side side, double detuning,
                                          std::optional<std::pair<Complex, Complex>> pass_override) {
  if (p < 1) throw ValidationError("coherent peak order p must be >= 1");
  if (drive.alpha2 < 0 || drive.beta2 < 0) throw ValidationError("mean photon numbers must be >= 0");

  // the left peak family is the A<->B mirror of the right one
  const double mean_a = side == Side::Right ? drive.alpha2 : drive.beta2;
  const double mean_b = side == Side::Right ? drive.beta2 : drive.alpha2;
  const double phase_a = side == Side::Right ? drive.phase_a : drive.phase_b;
  const double phase_b = side == Side::Right ? drive.phase_b : drive.phase_a;

  CoherentAmplitude out;
  if (mean_a == 0.0) return out;  // needs p+1 photons of the majority mode

  Complex c_a{1.0, 0.0}, c_b{1.0, 0.0};
  if (pass_override) {
    c_a = pass_override->first;
    c_b = pass_override->second;
  } else {
    const double ka = (params.omega01 + detuning) / params.v;
    const double kb = (params.omega01 - detuning) / params.v;
    c_a = pass_coefficient(channel, side == Side::Right ? ka : kb, params);
    c_b = pass_coefficient(channel, side == Side::Right ? kb : ka, params);
  }

  const int cap_a = trunc.n_max_a > 0 ? trunc.n_max_a : auto_cap(mean_a);
  const int cap_b = trunc.n_max_b > 0 ? trunc.n_max_b : auto_cap(mean_b);
  if (cap_a < auto_cap(mean_a) || (mean_b > 0 && cap_b < auto_cap(mean_b)))
    throw ValidationError("truncation caps below mean + 12 sqrt(mean) + 30");

  // split the coherent-state norm between the two factors to keep each in range
  const ModeSum sa = mode_sum_a(p, std::sqrt(mean_a), c_a, cap_a, -0.5 * mean_a);
  const ModeSum sb = mode_sum_b(p, std::sqrt(mean_b), c_b, cap_b, -0.5 * mean_b);

  const double pref_fact = to_double(factorial_rat(p + 1) * factorial_rat(p + 1));
  double prefactor = connected_T(p, params) / pref_fact;
  if (channel != PeakChannel::EMode) prefactor *= std::pow(2.0, -(p + 1));

  const Complex mixing_phase = std::polar(1.0, (p + 1) * phase_a - p * phase_b);
  out.value = prefactor * mixing_phase * sa.sum * sb.sum;
  // absolute L1 bound on the neglected tail; certified against the retained
  // L1 mass so that sign-alternating (physically suppressed) sums are not
  // rejected for cancelling
  out.tail_estimate =
      std::abs(prefactor) * (sa.tail * sb.l1 + sa.l1 * sb.tail + sa.tail * sb.tail);
  const double scale = std::abs(prefactor) * sa.l1 * sb.l1;
  if (out.tail_estimate > trunc.tail_bound * std::max(scale, 1e-300))
    throw NumericalError("coherent sum truncation: tail estimate above bound");
  return out;
}

double classical_limit_J(int p, double n_a, double n_b, const SystemParams& params, Side side) {
  if (p < 1) throw ValidationError("classical peak order p must be >= 1");
  if (n_a < 0 || n_b < 0) throw ValidationError("mean photon numbers must be >= 0");
  const double t = connected_T(p, params);
  const double fact = to_double(factorial_rat(p + 1));
  const double pref = std::pow(2.0, -2.0 * (p + 1)) * t * t / std::pow(fact, 4);
  const double occupation = side == Side::Right ? std::pow(n_a, p + 1) * std::pow(n_b, p)
                                                : std::pow(n_a, p) * std::pow(n_b, p + 1);
  return pref * occupation;
}

double interaction_length_ratio(int p) {
  if (p < 1) throw ValidationError("interaction length ratio needs p >= 1");
  const GammaValue g = extract_gamma(p);
  const double mag = std::abs(to_double(g.value));
  return std::pow(mag / (p + 1), 1.0 / p);
}

}  // namespace wavemix
