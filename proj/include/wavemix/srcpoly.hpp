#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "wavemix/rational.hpp"

namespace wavemix {

// Multivariate polynomial in the commuting source variables of the
// generating functional, with exact rational coefficients and a hard
// total-degree cap: products silently drop monomials above the cap, so
// arithmetic is closed and deterministic.  The marker variable tags the
// multiphoton vertex so that "through the vertex exactly once" is a
// coefficient extraction at marker^1.
class TruncatedSourcePolynomial {
 public:
  static constexpr int kVars = 6;
  enum Var { EtaA = 0, EtaBarA = 1, EtaB = 2, EtaBarB = 3, EtaBarS = 4, Marker = 5 };
  using Expo = std::array<int, kVars>;

  explicit TruncatedSourcePolynomial(int degree_cap) : cap_(degree_cap) {
    if (degree_cap < 0) throw std::domain_error("degree cap must be non-negative");
  }

  static int total_degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  static TruncatedSourcePolynomial monomial(const Expo& e, BigRat coeff, int cap);
  static TruncatedSourcePolynomial variable(Var v, int cap);

  int degree_cap() const { return cap_; }
  const std::map<Expo, BigRat>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Expo& e, const BigRat& coeff);

  TruncatedSourcePolynomial& operator+=(const TruncatedSourcePolynomial& o);
  TruncatedSourcePolynomial& operator*=(const BigRat& s);
  friend TruncatedSourcePolynomial operator+(TruncatedSourcePolynomial a,
                                             const TruncatedSourcePolynomial& b) {
    return a += b;
  }
  friend TruncatedSourcePolynomial operator*(const TruncatedSourcePolynomial& a,
                                             const TruncatedSourcePolynomial& b);

  // exp of a polynomial with no constant term, truncated at the cap
  TruncatedSourcePolynomial exp_series() const;

  BigRat coefficient(const Expo& e) const;
  int min_degree() const;

 private:
  int cap_;
  std::map<Expo, BigRat> terms_;
};

}  // namespace wavemix
