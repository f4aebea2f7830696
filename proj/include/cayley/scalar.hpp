#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace cayley {

/// Exact rational scalar. All algebraic-identity tests run over this field;
/// float mode uses plain double.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Forward-mode dual number a + b*eps with eps^2 = 0. Used to differentiate
/// chart maps and transition formulas exactly (no step-size error).
template <class F>
struct Dual {
  F v{};  ///< value
  F d{};  ///< derivative

  Dual() = default;
  Dual(int value) : v(value) {}
  Dual(F value) : v(std::move(value)) {}
  Dual(F value, F deriv) : v(std::move(value)), d(std::move(deriv)) {}

  Dual operator-() const { return {-v, -d}; }
  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) {
    d = d * o.v + v * o.d;
    v = v * o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    v = v / o.v;
    d = (d - v * o.d) / o.v;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

template <class F>
Dual<F> sqrt(const Dual<F>& x) {
  using std::sqrt;
  F s = sqrt(x.v);
  return {s, x.d / (F(2) * s)};
}

template <class F>
double to_double(const Dual<F>& x) { return to_double(x.v); }

/// Complex number over an arbitrary base field (double, Rational, Dual<...>).
/// std::complex is not reliable over non-float scalars, hence this type.
template <class F>
struct Complex {
  F re{};
  F im{};

  Complex() = default;
  Complex(F r) : re(std::move(r)) {}
  Complex(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(F(0), F(1)); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    if (im == F(0) && o.im == F(0)) {  // real fast path
      re *= o.re;
      return *this;
    }
    F r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    F n = o.re * o.re + o.im * o.im;
    F r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

template <class F>
Complex<F> conj(const Complex<F>& z) { return {z.re, -z.im}; }

/// Squared modulus, a real scalar.
template <class F>
F abs_sq(const Complex<F>& z) { return z.re * z.re + z.im * z.im; }

template <class F>
bool is_zero(const Complex<F>& z) { return z.re == F(0) && z.im == F(0); }

inline double abs_c(const Complex<double>& z) { return std::hypot(z.re, z.im); }

using CD = Complex<double>;
using CQ = Complex<Rational>;

inline CD to_cd(const CQ& z) { return {to_double(z.re), to_double(z.im)}; }
inline CD to_cd(const CD& z) { return z; }

template <class F>
CD to_cd(const Complex<Dual<F>>& z) { return {to_double(z.re), to_double(z.im)}; }

}  // namespace cayley
