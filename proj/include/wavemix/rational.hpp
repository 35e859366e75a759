#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>

namespace wavemix {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial_big(int n);
BigRat factorial_rat(int n);
BigInt binomial_big(int n, int k);

// Gaussian rational: exact complex arithmetic over Q(i).
struct GaussRat {
  BigRat re{0};
  BigRat im{0};

  GaussRat() = default;
  GaussRat(BigRat r) : re(std::move(r)) {}            // NOLINT(google-explicit-constructor)
  GaussRat(long long r) : re(r) {}                    // NOLINT(google-explicit-constructor)
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i_unit() { return {BigRat(0), BigRat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conjugate() const { return {re, -im}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    const BigRat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

  GaussRat inverse() const {
    const BigRat n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return {re / n, -im / n};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
};

std::complex<double> to_complex(const GaussRat& g);
double to_double(const BigRat& r);

}  // namespace wavemix
