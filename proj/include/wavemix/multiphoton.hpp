#pragma once

#include <vector>

#include "wavemix/diagrams.hpp"
#include "wavemix/smatrix.hpp"

namespace wavemix {

// Which single-photon pass coefficient dresses the spectator lines.
// Transmitted/Reflected carry the basis-change factor 1/2^{p+1}; the
// e-mode channel does not.
enum class PeakChannel { EMode, Transmitted, Reflected };

Complex pass_coefficient(PeakChannel channel, double k, const SystemParams& params);

// Disconnected multiphoton S element for the (2p+1)-th right peak with
// n_a photons of mode A and n_b of mode B:
//   prefactor * iT~^(2(p+1)) * c_A^{n_a-(p+1)} * c_B^{n_b} [* 2^{-(p+1)}]
// with prefactor n_a!(n_b+p)!/((p+1)!)^2 (sym) or n_a!n_b!/(p+1)! (nonsym).
// The connected block uses its momentum-independent resonant value; the
// pass coefficients are evaluated at k_a, k_b.
Complex disconnected_S(int p, int n_a, int n_b, PeakChannel channel, PrefactorMode mode,
                       const SystemParams& params, double k_a, double k_b);

// (n_b+p)! / (n_b! (p+1)!), the bosonic enhancement of the symmetrized
// channel over the non-symmetrized one.
BigRat stimulation_ratio(int p, int n_b);

struct MomentumDistribution {
  std::vector<double> k_grid;
  std::vector<double> intensity;
  double linewidth = 0.0;
};

// Momentum distribution of two mode-A photons scattering with (or without)
// two mode-B spectators.  Explicit conservation deltas are realized as
// unit-area Lorentzians of HWHM = linewidth; the delta-subtraction of the
// background is realized by zeroing it inside +-3*linewidth windows around
// the two stimulated peaks.  With spectators absent only the background
// term (coefficient 2!2!/2!) remains, with no exclusions.
MomentumDistribution spectrum_222(std::vector<double> k_grid, double k_a, double k_b,
                                  double linewidth, const SystemParams& params, bool n_b_present);

}  // namespace wavemix
