#include "wavemix/diagrams.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wavemix {

Complex semion_bubble(Complex z, double eps, double beta_inv_temp) {
  if (!(beta_inv_temp > 0)) throw ValidationError("inverse temperature must be positive (or +inf)");
  const Complex den = z - eps;
  if (den == Complex{0.0, 0.0}) throw NumericalError("semion_bubble evaluated at its pole");
  const double th = std::isinf(beta_inv_temp) ? 1.0 : std::tanh(0.5 * beta_inv_temp * eps);
  return th / den;
}

Complex dressed_green(double omega, const SystemParams& params) {
  return 1.0 / Complex{omega - params.omega01, 0.5 * params.gamma};
}

namespace {

constexpr int kMaxLoopOrder = 6;  // enumeration and series sizes kept desk-scale

void check_order(int p) {
  if (p < 0) throw ValidationError("loop order p must be >= 0");
  if (p > kMaxLoopOrder) throw ValidationError("loop order p must be <= 6");
}

// Integer d-coefficients of the running frequency shift on each of the
// 2(p+1) loop segments.  Even segments host the excited fermion, odd the
// ground one; crossing an absorption adds the line frequency, crossing an
// emission subtracts it.  In units Gamma = 1 with x = delta/Gamma:
//   omega_A -> eps + x, omega_B -> eps - x, omega_S -> eps + (2p+1)x,
// and the eps parts cancel identically segment by segment, leaving the
// integer coefficients below (the loop closure is asserted).
std::vector<long long> segment_shifts(const LoopOrdering& o) {
  const int n = 2 * (o.p + 1);
  if (static_cast<int>(o.emissions.size()) != o.p + 1)
    throw ValidationError("loop ordering must list p+1 emissions");
  std::vector<long long> c(n, 0);
  long long run = 0;
  int eps_count = 0;
  std::size_t em = 0;
  for (int j = 0; j < n; ++j) {
    c[j] = run;
    if (j % 2 == 0) {
      run += 1;  // absorb A
      ++eps_count;
    } else {
      const char e = o.emissions[em++];
      if (e == 'B') {
        run += 1;  // subtract (eps - x)
      } else if (e == 'S') {
        run -= 2 * o.p + 1;
      } else {
        throw ValidationError("loop emissions must be 'B' or 'S'");
      }
      --eps_count;
    }
  }
  if (run != 0 || eps_count != 0) throw NumericalError("loop does not close");
  return c;
}

// truncated product of ground-pole residue series; shared by the finite-x
// and formal-limit evaluations
struct ResidueSeries {
  BigRat pole_prefactor{1};      // product over ground-segment pairs of 1/(c_j - c_l)
  std::vector<GaussRat> series;  // product over excited segments, orders x^0..x^p
};

ResidueSeries residue_series(const std::vector<long long>& c, int p, int j) {
  const int n = static_cast<int>(c.size());
  ResidueSeries rs;
  rs.series.assign(p + 1, GaussRat{});
  rs.series[0] = GaussRat{BigRat(1)};
  const GaussRat minus_2i{BigRat(0), BigRat(-2)};  // 1/(i/2)
  for (int l = 0; l < n; ++l) {
    if (l == j) continue;
    const long long dc = c[j] - c[l];
    if (l % 2 == 1) {
      if (dc == 0)
        throw DegeneracyError("coalescing ground-segment poles in loop residue (non-cancelling)");
      rs.pole_prefactor /= BigRat(dc);
    } else {
      // 1/(dc*x + i/2) = -2i * sum_k (2i*dc)^k x^k, truncated at x^p
      std::vector<GaussRat> f(p + 1);
      GaussRat pow{BigRat(1)};
      const GaussRat ratio{BigRat(0), BigRat(2 * dc)};
      for (int k = 0; k <= p; ++k) {
        f[k] = minus_2i * pow;
        pow *= ratio;
      }
      std::vector<GaussRat> next(p + 1, GaussRat{});
      for (int a = 0; a <= p; ++a) {
        if (rs.series[a].is_zero()) continue;
        for (int b = 0; a + b <= p; ++b) next[a + b] += rs.series[a] * f[b];
      }
      rs.series = std::move(next);
    }
  }
  return rs;
}

}  // namespace

std::vector<LoopOrdering> loop_orderings(int p) {
  check_order(p);
  std::vector<LoopOrdering> out;
  for (int s = 0; s <= p; ++s) {
    LoopOrdering o;
    o.p = p;
    o.emissions.assign(p + 1, 'B');
    o.emissions[s] = 'S';
    out.push_back(std::move(o));
  }
  return out;
}

LoopOrdering canonical_ordering(int p) {
  check_order(p);
  LoopOrdering o;
  o.p = p;
  o.emissions.assign(p + 1, 'B');
  o.emissions[p] = 'S';
  return o;
}

GaussRat loop_amplitude(const LoopOrdering& ordering, const BigRat& x) {
  check_order(ordering.p);
  if (x == 0)
    throw DegeneracyError("ground-segment poles coalesce at delta = 0; use the formal limit");
  const auto c = segment_shifts(ordering);
  const int n = static_cast<int>(c.size());
  GaussRat total;
  for (int j = 1; j < n; j += 2) {
    GaussRat term{BigRat(1)};
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      const BigRat dc = BigRat(c[j] - c[l]);
      if (l % 2 == 1) {
        term *= GaussRat{dc * x}.inverse();
      } else {
        term *= GaussRat{dc * x, BigRat(1, 2)}.inverse();
      }
    }
    total += term;
  }
  return total;
}

GaussRat loop_amplitude(int p, const BigRat& x) { return loop_amplitude(canonical_ordering(p), x); }

GaussRat loop_amplitude(int p) {
  check_order(p);
  const auto ordering = canonical_ordering(p);
  const auto c = segment_shifts(ordering);
  const int n = static_cast<int>(c.size());
  // each residue is x^{-p} * (prefactor * series); sum, then demand the
  // divergent orders vanish identically
  std::vector<GaussRat> total(p + 1, GaussRat{});
  for (int j = 1; j < n; j += 2) {
    const ResidueSeries rs = residue_series(c, p, j);
    for (int k = 0; k <= p; ++k) total[k] += GaussRat{rs.pole_prefactor} * rs.series[k];
  }
  for (int k = 0; k < p; ++k) {
    if (!total[k].is_zero())
      throw DegeneracyError("divergent loop orders failed to cancel at order x^" +
                            std::to_string(k - p));
  }
  return total[p];
}

GammaValue extract_gamma(int p) {
  check_order(p);
  const GaussRat L = loop_amplitude(p);
  // frozen loop-measure constants: A = i/2, B = i/4
  const GaussRat A{BigRat(0), BigRat(1, 2)};
  const GaussRat B{BigRat(0), BigRat(1, 4)};
  GaussRat ghat = A;
  for (int k = 0; k < p; ++k) ghat *= B;
  ghat *= L;
  BigRat value;
  if (ghat.im == 0) {
    value = ghat.re;
  } else if (ghat.re == 0) {
    value = ghat.im;
  } else {
    throw NumericalError("loop coefficient is neither purely real nor purely imaginary: "
                         "convention mismatch");
  }
  if (boost::multiprecision::denominator(value) != 1)
    throw NumericalError("loop coefficient is not an integer: convention mismatch");
  return GammaValue{p, value};
}

double connected_T(int p, const SystemParams& params) {
  check_order(p);
  const GammaValue g = extract_gamma(p);
  const double gamma_int = to_double(g.value);
  const double combinatorial =
      to_double(BigRat(factorial_big(p + 1) * factorial_big(p + 1), BigInt(p + 1)));
  return -std::pow(2.0 * std::numbers::pi, -p) * combinatorial * std::pow(2.0, 2 * p + 1) *
         gamma_int * std::pow(params.v / params.gamma, p);
}

BigRat derivative_prefactor(int n_a, int n_b, int p, PrefactorMode mode, int degree_cap) {
  if (p < 0) throw ValidationError("p must be >= 0");
  if (n_a < p + 1) throw ValidationError("n_a must be >= p+1");
  if (n_b < 0) throw ValidationError("n_b must be >= 0");
  const int needed = 2 * (n_a + n_b) + 1;
  if (needed > degree_cap)
    throw NumericalError("derivative_prefactor: required total degree " + std::to_string(needed) +
                         " exceeds the cap " + std::to_string(degree_cap));

  using Poly = TruncatedSourcePolynomial;
  using Expo = Poly::Expo;

  Poly action(degree_cap);
  {  // free + single-scattering quadratic terms, couplings normalized away
    Expo qa{};
    qa[Poly::EtaA] = 1;
    qa[Poly::EtaBarA] = 1;
    action.add_term(qa, BigRat(1));
    Expo qb{};
    qb[Poly::EtaB] = 1;
    qb[Poly::EtaBarB] = 1;
    action.add_term(qb, BigRat(1));
  }
  {  // marked vertex, weight 1/(p+1)
    Expo vx{};
    vx[Poly::EtaA] = p + 1;
    vx[Poly::Marker] = 1;
    if (mode == PrefactorMode::Sym) {
      vx[Poly::EtaBarB] = p;
      vx[Poly::EtaBarS] = 1;
    } else {
      vx[Poly::EtaBarS] = p + 1;
    }
    action.add_term(vx, BigRat(1, p + 1));
  }

  const Poly z = action.exp_series();

  Expo target{};
  target[Poly::EtaA] = n_a;
  target[Poly::EtaBarA] = n_a - p - 1;
  target[Poly::EtaB] = n_b;
  target[Poly::Marker] = 1;
  BigRat derivative_factorials = factorial_rat(n_a) * factorial_rat(n_a - p - 1) * factorial_rat(n_b);
  if (mode == PrefactorMode::Sym) {
    target[Poly::EtaBarB] = n_b + p;
    target[Poly::EtaBarS] = 1;
    derivative_factorials *= factorial_rat(n_b + p);
  } else {
    target[Poly::EtaBarB] = n_b;
    target[Poly::EtaBarS] = p + 1;
    derivative_factorials *= factorial_rat(n_b) * factorial_rat(p + 1);
  }

  return z.coefficient(target) * derivative_factorials;
}

}  // namespace wavemix
