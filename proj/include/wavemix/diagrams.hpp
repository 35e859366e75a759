#pragma once

#include <string>
#include <vector>

#include "wavemix/core.hpp"
#include "wavemix/rational.hpp"
#include "wavemix/srcpoly.hpp"

namespace wavemix {

// Raised when the exact residue algebra meets coalescing poles that do not
// cancel (never silently NaN).
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Bare bubble of the fermionized scatterer: tanh(beta*eps/2)/(z - eps),
// with z the analytically continued frequency slot supplied by the caller.
// beta may be +infinity (zero temperature, tanh -> 1).
Complex semion_bubble(Complex z, double eps, double beta_inv_temp);

// Scatterer propagator dressed by the line: 1/(omega - eps + i*Gamma/2).
Complex dressed_green(double omega, const SystemParams& params);

// One cyclic arrangement of the 2(p+1) external lines on the alternating
// fermion loop: p+1 absorptions (all at omega01 + delta) interleaved with
// the emission sequence, a multiset of p 'B' lines (omega01 - delta) and
// one 'S' line (omega01 + (2p+1)delta).  Orderings are identified up to
// cyclic rotation; loop_orderings lists all p+1 linear representatives of
// the single cyclic class (their loop values coincide, which the tests
// assert as the identical-particle dedup check).
struct LoopOrdering {
  int p = 0;
  std::vector<char> emissions;  // length p+1, entries 'B' or 'S'
};

std::vector<LoopOrdering> loop_orderings(int p);
LoopOrdering canonical_ordering(int p);

// Loop value at a finite rational detuning x = delta/Gamma (exact residue
// sum over the ground-segment poles; Gamma = 1 units).  x = 0 raises a
// DegeneracyError -- the poles coalesce there and only the formal limit
// below is defined.
GaussRat loop_amplitude(const LoopOrdering& ordering, const BigRat& delta_over_gamma);
GaussRat loop_amplitude(int p, const BigRat& delta_over_gamma);

// Exact x -> 0 limit taken in truncated power series over the formal
// variable x = delta/Gamma: individual residues diverge like x^{-p}, the
// divergent orders cancel exactly across residues (asserted), and the
// finite part is returned as a Gaussian rational.
GaussRat loop_amplitude(int p);

struct GammaValue {
  int p = 0;
  BigRat value{0};
};

// Integer loop coefficient of the connected (p+1)-photon diagram.
//
// Convention: gamma_hat(p) = A * B^p * loop_amplitude(p) with the two
// loop-measure constants frozen once, A = i/2 (global normalization,
// anchored at p=0 -> +1) and B = i/4 (modulus anchored by |gamma(1)| = 2,
// phase = the declared loop orientation).  gamma_hat is then alternately
// purely real / purely imaginary; its nonzero component is the table
// value.  p = 0, 1 are the calibration anchors; p >= 2 are parameter-free
// predictions.  A gamma_hat that is neither purely real nor purely
// imaginary, or not an integer, raises a convention-mismatch error.
GammaValue extract_gamma(int p);

// i T~^(2(p+1)) at the fully resonant point:
// -(1/(2pi)^p) * (p+1)!^2/(p+1) * 2^{2p+1} * gamma^{(2p+1)} * (v/Gamma)^p.
double connected_T(int p, const SystemParams& params);

enum class PrefactorMode { Sym, Nonsym };

// Combinatorial prefactor of the disconnected multiphoton diagram,
// computed the slow independent way: build the quadratic source action
// plus the marked vertex as a TruncatedSourcePolynomial, expand exp(A) by
// exact series, extract the target monomial at marker^1, and multiply by
// the derivative factorials.  Sym routes p of the vertex out-lines into
// the spectator-B source; Nonsym routes all p+1 out-lines into the signal
// source.  Closed forms these must equal:
//   sym:    n_a! (n_b+p)! / (p+1)
//   nonsym: n_a! (p+1)! n_b! / (p+1)
BigRat derivative_prefactor(int n_a, int n_b, int p, PrefactorMode mode, int degree_cap = 40);

}  // namespace wavemix
