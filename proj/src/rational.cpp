#include "wavemix/rational.hpp"

namespace wavemix {

BigInt factorial_big(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigRat factorial_rat(int n) { return BigRat(factorial_big(n)); }

BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial_big(n) / (factorial_big(k) * factorial_big(n - k));
}

std::complex<double> to_complex(const GaussRat& g) { return {to_double(g.re), to_double(g.im)}; }

double to_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace wavemix
