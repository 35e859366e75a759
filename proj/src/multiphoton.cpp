#include "wavemix/multiphoton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wavemix {

Complex pass_coefficient(PeakChannel channel, double k, const SystemParams& params) {
  const ScatterCoeffs c = single_photon_coeffs(k, params);
  switch (channel) {
    case PeakChannel::EMode:
      return c.t_tilde;
    case PeakChannel::Transmitted:
      return c.t;
    case PeakChannel::Reflected:
      return c.r;
  }
  throw ValidationError("unknown channel");
}

Complex disconnected_S(int p, int n_a, int n_b, PeakChannel channel, PrefactorMode mode,
                       const SystemParams& params, double k_a, double k_b) {
  if (p < 0 || n_b < 0) throw ValidationError("p and n_b must be >= 0");
  if (n_a < p + 1)
    throw ValidationError("insufficient photons: n_a must be >= p+1 for a (p+1)-photon process");
  const BigRat pref =
      mode == PrefactorMode::Sym
          ? factorial_rat(n_a) * factorial_rat(n_b + p) / (factorial_rat(p + 1) * factorial_rat(p + 1))
          : factorial_rat(n_a) * factorial_rat(n_b) / factorial_rat(p + 1);
  const Complex ca = pass_coefficient(channel, k_a, params);
  const Complex cb = pass_coefficient(channel, k_b, params);
  Complex value = to_double(pref) * connected_T(p, params) *
                  std::pow(ca, static_cast<double>(n_a - (p + 1))) *
                  std::pow(cb, static_cast<double>(n_b));
  if (channel != PeakChannel::EMode) value *= std::pow(2.0, -(p + 1));
  return value;
}

BigRat stimulation_ratio(int p, int n_b) {
  if (p < 0 || n_b < 0) throw ValidationError("p and n_b must be >= 0");
  return factorial_rat(n_b + p) / (factorial_rat(n_b) * factorial_rat(p + 1));
}

namespace {

// unit-area Lorentzian, HWHM = w
double lorentzian(double x, double w) { return (w / std::numbers::pi) / (x * x + w * w); }

double background_coefficient(double k, double k_a, const SystemParams& params) {
  return std::abs(
      two_photon_connected(k, 2 * k_a - k, k_a, k_a, params, TwoPhotonBasis::RL).coefficient);
}

}  // namespace

MomentumDistribution spectrum_222(std::vector<double> k_grid, double k_a, double k_b,
                                  double linewidth, const SystemParams& params, bool n_b_present) {
  if (!(linewidth > 0)) throw ValidationError("linewidth must be positive");
  if (linewidth >= std::abs(k_a - k_b))
    throw NumericalError("resolution: linewidth must be smaller than |k_a - k_b|");
  if (k_grid.size() < 2) throw ValidationError("k grid needs at least two points");
  for (std::size_t i = 1; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > k_grid[i - 1])) throw ValidationError("k grid must be strictly ascending");
  }
  const double step = k_grid[1] - k_grid[0];
  for (std::size_t i = 1; i < k_grid.size(); ++i) {
    if (std::abs((k_grid[i] - k_grid[i - 1]) - step) > 1e-9 * std::abs(step))
      throw ValidationError("k grid must be uniform");
  }
  const double peak1 = k_b, peak2 = 2 * k_a - k_b;
  const double lo = std::min(peak1, peak2) - 10 * linewidth;
  const double hi = std::max(peak1, peak2) + 10 * linewidth;
  if (k_grid.front() > lo || k_grid.back() < hi)
    throw ValidationError("k grid must cover both stimulated peaks +- 10 linewidths");

  const double rb2 = std::norm(single_photon_coeffs(k_b, params).r);
  const double stim_coeff = std::abs(
      two_photon_connected(k_b, peak2, k_a, k_a, params, TwoPhotonBasis::RL).coefficient);

  MomentumDistribution dist;
  dist.linewidth = linewidth;
  dist.k_grid = std::move(k_grid);
  dist.intensity.resize(dist.k_grid.size());
  for (std::size_t i = 0; i < dist.k_grid.size(); ++i) {
    const double k = dist.k_grid[i];
    // 2!2!/2! = 2 background, 2!3!/(2!2!) = 3 stimulated
    double value = 2.0 * background_coefficient(k, k_a, params);
    if (n_b_present) {
      const bool excluded =
          std::abs(k - peak1) <= 3 * linewidth || std::abs(k - peak2) <= 3 * linewidth;
      if (excluded) value = 0.0;
      value += 3.0 * stim_coeff * (lorentzian(k - peak1, linewidth) + lorentzian(k - peak2, linewidth));
    }
    dist.intensity[i] = 0.25 * rb2 * value;
  }
  return dist;
}

}  // namespace wavemix
