#include "wavemix/srcpoly.hpp"

#include <limits>

namespace wavemix {

TruncatedSourcePolynomial TruncatedSourcePolynomial::monomial(const Expo& e, BigRat coeff, int cap) {
  TruncatedSourcePolynomial p(cap);
  p.add_term(e, coeff);
  return p;
}

TruncatedSourcePolynomial TruncatedSourcePolynomial::variable(Var v, int cap) {
  Expo e{};
  e[v] = 1;
  return monomial(e, BigRat(1), cap);
}

void TruncatedSourcePolynomial::add_term(const Expo& e, const BigRat& coeff) {
  for (int x : e) {
    if (x < 0) throw std::domain_error("negative exponent");
  }
  if (total_degree(e) > cap_ || coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSourcePolynomial& TruncatedSourcePolynomial::operator+=(const TruncatedSourcePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSourcePolynomial& TruncatedSourcePolynomial::operator*=(const BigRat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

TruncatedSourcePolynomial operator*(const TruncatedSourcePolynomial& a,
                                    const TruncatedSourcePolynomial& b) {
  TruncatedSourcePolynomial out(a.cap_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = TruncatedSourcePolynomial::total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + TruncatedSourcePolynomial::total_degree(eb) > a.cap_) continue;
      TruncatedSourcePolynomial::Expo e;
      for (int i = 0; i < TruncatedSourcePolynomial::kVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSourcePolynomial TruncatedSourcePolynomial::exp_series() const {
  if (terms_.count(Expo{})) throw std::domain_error("exp_series requires a zero constant term");
  TruncatedSourcePolynomial result(cap_);
  result.add_term(Expo{}, BigRat(1));
  if (terms_.empty()) return result;

  const int step = min_degree();  // each extra power raises total degree by >= step
  TruncatedSourcePolynomial power = result;  // A^0
  BigRat inv_factorial(1);
  const int k_max = step > 0 ? cap_ / step : cap_;
  for (int k = 1; k <= k_max; ++k) {
    power = power * (*this);
    if (power.empty()) break;
    inv_factorial /= k;
    TruncatedSourcePolynomial scaled = power;
    scaled *= inv_factorial;
    result += scaled;
  }
  return result;
}

BigRat TruncatedSourcePolynomial::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRat(0) : it->second;
}

int TruncatedSourcePolynomial::min_degree() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, total_degree(e));
  return terms_.empty() ? 0 : m;
}

}  // namespace wavemix
