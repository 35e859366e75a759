#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "wavemix/diagrams.hpp"
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

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("semion bubble: continuation slot, pole, temperature factor") {
  const double eps = 10.0;
  CHECK(std::abs(semion_bubble(Complex{eps + 0.5, 0.0}, eps, kInf) - 2.0) <= 1e-15);
  CHECK_THROWS_AS(static_cast<void>(semion_bubble(Complex{eps, 0.0}, eps, kInf)), NumericalError);
  CHECK_THROWS_AS(static_cast<void>(semion_bubble(Complex{eps + 1, 0}, eps, -1.0)), ValidationError);

  // tanh(0) = 0 at infinite temperature
  CHECK(std::abs(semion_bubble(Complex{1.0, 0.0}, 0.0, 5.0)) == 0.0);

  // beta*eps = 2 artanh(1/2) halves the zero-temperature value
  const double beta = 2.0 * std::atanh(0.5) / eps;
  const Complex cold = semion_bubble(Complex{eps + 0.7, 0.0}, eps, kInf);
  const Complex warm = semion_bubble(Complex{eps + 0.7, 0.0}, eps, beta);
  CHECK(std::abs(warm - 0.5 * cold) <= 1e-14);
}

TEST_CASE("dressed propagator values") {
  const SystemParams params = params_unit();
  CHECK(std::abs(dressed_green(params.omega01, params) - Complex{0.0, -2.0}) <= 1e-15);

  // Lorentzian half width at Gamma/2
  const double peak = std::norm(dressed_green(params.omega01, params));
  CHECK(std::norm(dressed_green(params.omega01 + 0.5, params)) == doctest::Approx(0.5 * peak));
  CHECK(std::norm(dressed_green(params.omega01 - 0.5, params)) == doctest::Approx(0.5 * peak));
  CHECK(std::abs(dressed_green(1e9, params)) <= 1e-8);

  // composing the bubble with an externally shifted slot reproduces it
  for (double omega : {9.0, 10.0, 11.5}) {
    const Complex via_bubble =
        semion_bubble(Complex{omega, 0.5 * params.gamma}, params.omega01, kInf);
    CHECK(std::abs(via_bubble - dressed_green(omega, params)) <= 1e-15);
  }
}

TEST_CASE("loop orderings: one cyclic class, identical values") {
  for (int p = 0; p <= 4; ++p) {
    const auto orderings = loop_orderings(p);
    REQUIRE(static_cast<int>(orderings.size()) == p + 1);
    const BigRat x(1, 1000);
    const GaussRat reference = loop_amplitude(orderings.front(), x);
    for (const auto& o : orderings) {
      CHECK(loop_amplitude(o, x) == reference);  // exact rational equality
    }
  }
}

TEST_CASE("loop amplitude: finite detuning approaches the formal limit") {
  for (int p = 0; p <= 3; ++p) {
    const GaussRat limit = loop_amplitude(p);
    const auto dist = [&](const BigRat& x) {
      return std::abs(to_complex(loop_amplitude(p, x)) - to_complex(limit));
    };
    const double d3 = dist(BigRat(1, 1000));
    const double d4 = dist(BigRat(1, 10000));
    CHECK(d4 < d3);
    CHECK(d4 <= 1e-2 * std::abs(to_complex(limit)));
  }
}

TEST_CASE("loop amplitude: zero detuning is a reported degeneracy") {
  CHECK_THROWS_AS(static_cast<void>(loop_amplitude(1, BigRat(0))), DegeneracyError);
}

TEST_CASE("loop values and the published gamma table") {
  // L(p) = -2i 4^p C(2p,p)
  const long long binom[] = {1, 2, 6, 20, 70, 252};
  for (int p = 0; p <= 4; ++p) {
    const GaussRat L = loop_amplitude(p);
    CHECK(L.re == 0);
    CHECK(L.im == BigRat(-2) * BigRat(1LL << (2 * p)) * BigRat(binom[p]));
  }

  const long long table[] = {1, 2, -6, -20};
  for (int p = 0; p <= 3; ++p) {
    const GammaValue g = extract_gamma(p);
    CHECK(g.p == p);
    CHECK(g.value == BigRat(table[p]));
  }

  // conjectured continuation of the pattern; checked as |gamma| only,
  // the published table stops at p = 3
  CHECK(boost::multiprecision::abs(extract_gamma(4).value) == BigRat(70));

  CHECK_THROWS_AS(static_cast<void>(extract_gamma(7)), ValidationError);
}

TEST_CASE("connected T values and the cross-module identity") {
  const SystemParams params = params_unit();
  CHECK(connected_T(0, params) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(connected_T(1, params) ==
        doctest::Approx(-16.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(connected_T(2, params) ==
        doctest::Approx(576.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-14));

  const double k = params.k_res();
  const Complex two_photon =
      two_photon_connected(k, k, k, k, params, TwoPhotonBasis::EMode).coefficient;
  CHECK(std::abs(two_photon - connected_T(1, params)) <= 1e-12);

  // (v/Gamma)^p scaling carries the units
  SystemParams scaled = params;
  scaled.v = 3.0;
  CHECK(connected_T(2, scaled) == doctest::Approx(9.0 * connected_T(2, params)).epsilon(1e-13));
}

TEST_CASE("truncated source polynomial: cap closure and exp series") {
  using Poly = TruncatedSourcePolynomial;
  Poly a(4);
  Poly::Expo quad{};
  quad[Poly::EtaA] = 1;
  quad[Poly::EtaBarA] = 1;
  a.add_term(quad, BigRat(3));

  // squaring hits the cap, cubing is discarded entirely
  const Poly a2 = a * a;
  Poly::Expo quad2{};
  quad2[Poly::EtaA] = 2;
  quad2[Poly::EtaBarA] = 2;
  CHECK(a2.coefficient(quad2) == BigRat(9));
  CHECK((a2 * a).empty());

  // exp(A) = 1 + A + A^2/2 under the cap
  const Poly z = a.exp_series();
  CHECK(z.coefficient(Poly::Expo{}) == BigRat(1));
  CHECK(z.coefficient(quad) == BigRat(3));
  CHECK(z.coefficient(quad2) == BigRat(9, 2));
  CHECK(z.terms().size() == 3);

  Poly with_const(4);
  with_const.add_term(Poly::Expo{}, BigRat(1));
  CHECK_THROWS_AS(static_cast<void>(with_const.exp_series()), std::domain_error);
}

TEST_CASE("derivative prefactor oracle: published instances") {
  CHECK(derivative_prefactor(2, 1, 1, PrefactorMode::Sym) == BigRat(2));
  CHECK(derivative_prefactor(2, 0, 1, PrefactorMode::Sym) == BigRat(1));
  const BigRat ratio = derivative_prefactor(2, 2, 1, PrefactorMode::Sym) /
                       derivative_prefactor(2, 2, 1, PrefactorMode::Nonsym);
  CHECK(ratio == BigRat(3, 2));
}

TEST_CASE("derivative prefactor oracle: exact ratio law") {
  for (int p = 0; p <= 2; ++p) {
    for (int n_a = p + 1; n_a <= 6; ++n_a) {
      for (int n_b = 0; n_b <= 6; ++n_b) {
        const BigRat sym = derivative_prefactor(n_a, n_b, p, PrefactorMode::Sym);
        const BigRat nonsym = derivative_prefactor(n_a, n_b, p, PrefactorMode::Nonsym);
        const BigRat expected =
            factorial_rat(n_b + p) / (factorial_rat(n_b) * factorial_rat(p + 1));
        CHECK(sym / nonsym == expected);
      }
    }
  }
}

TEST_CASE("derivative prefactor oracle: preconditions and capacity") {
  CHECK_THROWS_AS(static_cast<void>(derivative_prefactor(1, 0, 1, PrefactorMode::Sym)),
                  ValidationError);
  CHECK_THROWS_AS(static_cast<void>(derivative_prefactor(25, 0, 1, PrefactorMode::Sym)),
                  NumericalError);
  // a raised cap admits what the default refuses
  CHECK(derivative_prefactor(25, 0, 1, PrefactorMode::Sym, 60) ==
        factorial_rat(25) * factorial_rat(1) / 2);
}
