#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <sstream>
#include <string>

namespace ncphase {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "3", "-1/24"
inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline Rational rational(long long num, long long den = 1) {
  return Rational(num) / Rational(den);
}

/// Exact complex number re + i*im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r) : re(r), im(0) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// "2", "-i", "(1/2)*i", "(1+2*i)"
  std::string str() const {
    auto wrap = [](const Rational& q) {
      std::string s = to_string(q);
      return s.find('/') != std::string::npos ? "(" + s + ")" : s;
    };
    if (im == 0) return wrap(re);
    std::string imag;
    if (im == 1)
      imag = "i";
    else if (im == -1)
      imag = "-i";
    else
      imag = wrap(im) + "*i";
    if (re == 0) return imag;
    std::string s = to_string(re);
    s += (im < 0 ? "-" : "+");
    Rational mag = im < 0 ? Rational(-im) : im;
    s += mag == 1 ? "i" : to_string(mag) + "*i";
    return "(" + s + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace ncphase
