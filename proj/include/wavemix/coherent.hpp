#pragma once

#include <optional>

#include "wavemix/multiphoton.hpp"

namespace wavemix {

// Coherent drive occupations: alpha2 = <N_A>, beta2 = <N_B>, with the
// complex amplitudes alpha = sqrt(alpha2) e^{i phase_a} etc.
struct CoherentDrive {
  double alpha2 = 0.0;
  double beta2 = 0.0;
  double phase_a = 0.0;
  double phase_b = 0.0;
};

// Fock-sum truncation: caps default to mean + 12 sqrt(mean) + 30; the
// recorded tail estimate must stay below tail_bound.
struct TruncationPolicy {
  int n_max_a = 0;  // 0 -> automatic
  int n_max_b = 0;
  double tail_bound = 1e-9;
};

enum class PhotonStatistics { Poisson, Gaussian };

// Poisson pmf via log-gamma, or its large-mean Gaussian limit.
double photon_number_pmf(double mean, long long n, PhotonStatistics model);

struct CoherentAmplitude {
  Complex value{0.0, 0.0};
  // absolute L1 bound on the truncated tail; the truncation check compares
  // it against tail_bound times the retained L1 mass of the series
  double tail_estimate = 0.0;
};

// Side-peak amplitude for two coherent drives:
//   2^{-(p+1)} iT~^(2(p+1))/((p+1)!)^2 e^{-(a2+b2)/2}
//     * sum_{N_A >= p+1, N_B >= 0} a^{N_A} b^{N_B} / sqrt(N_A! N_B!)
//         * sqrt(N_A!(N_B+p)!/((N_A-p-1)! N_B!)) c_A^{N_A-p-1} c_B^{N_B}
// evaluated at the real amplitudes a, b, times the wave-mixing phase
// e^{i((p+1) phase_a - p phase_b)}.  The Fock-state projections are blind
// to the drive phases; factoring the physical mixing phase this way keeps
// intensities U(1)-invariant and the phase covariance exact.
//
// Pass coefficients default to the ideal-spectator value 1; supply
// pass_override or a detuning to dress them with the channel coefficients
// at k = (omega01 +- detuning)/v.
CoherentAmplitude coherent_peak_amplitude(int p, const CoherentDrive& drive, PeakChannel channel,
                                          const SystemParams& params,
                                          const TruncationPolicy& trunc = {},
                                          Side side = Side::Right, double detuning = 0.0,
                                          std::optional<std::pair<Complex, Complex>> pass_override =
                                              std::make_optional(std::pair<Complex, Complex>{
                                                  {1.0, 0.0}, {1.0, 0.0}}));

// Classical-limit side-peak intensity (Eq. chain through the connected
// block): 2^{-2(p+1)} [iT~^(2(p+1))]^2/((p+1)!)^4 * n_a^{p+1} n_b^p for the
// right side; the left side swaps the exponents.
double classical_limit_J(int p, double n_a, double n_b, const SystemParams& params,
                         Side side = Side::Right);

// L^(2p+1)/L^(1) = (|gamma^(2p+1)|/(p+1))^{1/p}, L^(1) = v/(pi Gamma).
double interaction_length_ratio(int p);

}  // namespace wavemix
