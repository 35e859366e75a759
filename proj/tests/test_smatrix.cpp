#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wavemix/smatrix.hpp"

using namespace wavemix;

namespace {

SystemParams params_unit() {
  SystemParams p;
  p.omega01 = 10.0;
  p.gamma = 1.0;
  p.v = 1.0;
  return p;
}

}  // namespace

TEST_CASE("chirality rotation: definition and unitarity") {
  const double s = 1.0 / std::numbers::sqrt2;
  auto [e1, o1] = chirality_rotate({1, 0}, {0, 0}, ChiralityDirection::ToEO);
  CHECK(std::abs(e1 - Complex{s, 0}) <= 1e-15);
  CHECK(std::abs(o1 - Complex{s, 0}) <= 1e-15);

  auto [e2, o2] = chirality_rotate({1, 0}, {1, 0}, ChiralityDirection::ToEO);
  CHECK(std::abs(e2 - Complex{std::numbers::sqrt2, 0}) <= 1e-15);
  CHECK(std::abs(o2) <= 1e-15);

  const Complex r{0.3, -0.7}, l{-1.2, 0.4};
  auto [e, o] = chirality_rotate(r, l, ChiralityDirection::ToEO);
  auto [r2, l2] = chirality_rotate(e, o, ChiralityDirection::ToRL);
  CHECK(std::abs(r2 - r) <= 1e-15);
  CHECK(std::abs(l2 - l) <= 1e-15);
}

TEST_CASE("single-photon coefficients at landmark momenta") {
  const SystemParams params = params_unit();

  const ScatterCoeffs res = single_photon_coeffs(params.k_res(), params);
  CHECK(std::abs(res.t) <= 1e-15);
  CHECK(std::abs(res.r + 1.0) <= 1e-15);
  CHECK(std::abs(res.t_tilde + 1.0) <= 1e-15);

  const ScatterCoeffs half = single_photon_coeffs(params.k_res() + 0.5, params);
  CHECK(std::abs(half.t - Complex{0.5, -0.5}) <= 1e-14);
  CHECK(std::abs(half.r - Complex{-0.5, -0.5}) <= 1e-14);

  const ScatterCoeffs far = single_photon_coeffs(params.k_res() + 1e3, params);
  CHECK(std::abs(far.t - 1.0) <= 1e-3);
  CHECK(std::abs(far.r) <= 1e-3);
}

TEST_CASE("single-photon unitarity and elastic phase at random momenta") {
  const SystemParams params = params_unit();
  std::mt19937 rng(101u);
  std::uniform_real_distribution<double> u(-15.0, 15.0);
  for (int i = 0; i < 1000; ++i) {
    const ScatterCoeffs c = single_photon_coeffs(params.k_res() + u(rng), params);
    CHECK(std::abs(std::norm(c.t) + std::norm(c.r) - 1.0) <= 1e-12);
    CHECK(std::abs(std::abs(c.t_tilde) - 1.0) <= 1e-12);
    CHECK(std::abs(c.t - (c.t_tilde + 1.0) / 2.0) <= 1e-14);
    CHECK(std::abs(c.r - (c.t_tilde - 1.0) / 2.0) <= 1e-14);
  }
}

TEST_CASE("two-photon connected coefficient at full resonance") {
  const SystemParams params = params_unit();
  const double k = params.k_res();
  const ConnectedAmplitude e_basis = two_photon_connected(k, k, k, k, params, TwoPhotonBasis::EMode);
  CHECK(e_basis.coefficient.real() ==
        doctest::Approx(-16.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(std::abs(e_basis.coefficient.imag()) <= 1e-14);
  CHECK(e_basis.conserved_total == doctest::Approx(2 * k));
  CHECK(e_basis.order == 2);

  const ConnectedAmplitude rl = two_photon_connected(k, k, k, k, params, TwoPhotonBasis::RL);
  CHECK(rl.coefficient.real() == doctest::Approx(-4.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("two-photon coefficient symmetries") {
  const SystemParams params = params_unit();
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 64; ++i) {
    const double k1 = params.k_res() + u(rng), k2 = params.k_res() + u(rng);
    const double p1 = params.k_res() + u(rng), p2 = k1 + k2 - p1;
    const Complex c = two_photon_connected(p1, p2, k1, k2, params).coefficient;
    CHECK(std::abs(two_photon_connected(p1, p2, k2, k1, params).coefficient - c) <= 1e-14);
    CHECK(std::abs(two_photon_connected(p2, p1, k1, k2, params).coefficient - c) <= 1e-14);
    // in/out exchange preserves the magnitude
    const Complex swapped = two_photon_connected(k1, k2, p1, p2, params).coefficient;
    CHECK(std::abs(swapped) == doctest::Approx(std::abs(c)).epsilon(1e-12));
  }
}
