#pragma once

#include "cayley/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace cayley {

inline constexpr int kNumVars = 27;

/// Exponent multi-index over the 27 coordinates.
using MonoKey = std::array<std::uint8_t, kNumVars>;

inline int mono_degree(const MonoKey& k) {
  int d = 0;
  for (auto e : k) d += e;
  return d;
}

/// Scalar conversions used when evaluating exact polynomials at points of a
/// different scalar type.
inline Rational convert_scalar(const Rational& q, const Rational&) { return q; }
inline CQ convert_scalar(const Rational& q, const CQ&) { return CQ(q); }
inline CD convert_scalar(const Rational& q, const CD&) { return CD(to_double(q)); }
inline CD convert_scalar(const CQ& q, const CD&) { return to_cd(q); }
inline CQ convert_scalar(const CQ& q, const CQ&) { return q; }
inline Complex<Dual<double>> convert_scalar(const CQ& q, const Complex<Dual<double>>&) {
  return {Dual<double>(to_double(q.re)), Dual<double>(to_double(q.im))};
}
inline Complex<Dual<Rational>> convert_scalar(const CQ& q, const Complex<Dual<Rational>>&) {
  return {Dual<Rational>(q.re), Dual<Rational>(q.im)};
}
inline Complex<Dual<double>> convert_scalar(const Rational& q, const Complex<Dual<double>>&) {
  return {Dual<double>(to_double(q)), Dual<double>(0.0)};
}

/// Sparse multivariate polynomial in the 27 coordinates with coefficients in
/// a commutative ring C. No zero coefficients are stored. Doubles as a
/// constant-coefficient differential operator through apply_op.
template <class C>
struct Polynomial {
  std::map<MonoKey, C> terms;

  Polynomial() = default;
  Polynomial(int v) {  // ring embedding of integers, used by generic algebra
    if (v != 0) terms.emplace(MonoKey{}, C(v));
  }

  static Polynomial constant(C c) {
    Polynomial p;
    if (!(c == C(0))) p.terms.emplace(MonoKey{}, std::move(c));
    return p;
  }
  static Polynomial variable(int i) {
    Polynomial p;
    MonoKey k{};
    k[i] = 1;
    p.terms.emplace(k, C(1));
    return p;
  }
  static Polynomial monomial(const MonoKey& k, C c) {
    Polynomial p;
    if (!(c == C(0))) p.terms.emplace(k, std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, mono_degree(k));
    return d;
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms) {
        MonoKey k;
        for (int i = 0; i < kNumVars; ++i) k[i] = static_cast<std::uint8_t>(ka[i] + kb[i]);
        r.add_term(k, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const C& c, const Polynomial& a) {
    Polynomial r;
    if (c == C(0)) return r;
    for (const auto& [k, v] : a.terms) r.terms.emplace(k, c * v);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Division by a nonzero constant only (enough for the generic Jordan
  /// algebra code, which divides by 2).
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    if (b.terms.size() != 1 || b.terms.begin()->first != MonoKey{})
      throw std::invalid_argument("Polynomial division is only defined by constants");
    C inv = C(1) / b.terms.begin()->second;
    return inv * a;
  }

  void add_term(const MonoKey& k, C c) {
    auto it = terms.find(k);
    if (it == terms.end()) {
      if (!(c == C(0))) terms.emplace(k, std::move(c));
    } else {
      it->second += c;
      if (it->second == C(0)) terms.erase(it);
    }
  }

  C coefficient(const MonoKey& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? C(0) : it->second;
  }

  Polynomial derivative(int var) const {
    Polynomial r;
    for (const auto& [k, c] : terms) {
      if (k[var] == 0) continue;
      MonoKey kk = k;
      kk[var] -= 1;
      r.add_term(kk, C(static_cast<int>(k[var])) * c);
    }
    return r;
  }

  template <class T>
  T evaluate(const std::array<T, kNumVars>& point) const {
    T acc(0);
    for (const auto& [k, c] : terms) {
      T t = convert_scalar(c, T(0));
      for (int i = 0; i < kNumVars; ++i)
        for (int e = 0; e < k[i]; ++e) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }
};

/// Applies the constant-coefficient operator D^P to Q: each monomial of P
/// becomes the corresponding partial derivative.
template <class C>
Polynomial<C> apply_op(const Polynomial<C>& p, const Polynomial<C>& q) {
  Polynomial<C> r;
  for (const auto& [alpha, pc] : p.terms) {
    for (const auto& [beta, qc] : q.terms) {
      bool ok = true;
      for (int i = 0; i < kNumVars; ++i)
        if (beta[i] < alpha[i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      C factor(1);
      MonoKey k;
      for (int i = 0; i < kNumVars; ++i) {
        k[i] = static_cast<std::uint8_t>(beta[i] - alpha[i]);
        for (int e = 0; e < alpha[i]; ++e) factor *= C(static_cast<int>(beta[i] - e));
      }
      r.add_term(k, pc * qc * factor);
    }
  }
  return r;
}

/// Monomial pairing <<P,Q>> = sum alpha! p_alpha conj(q_alpha); conjugation
/// acts on coefficients only. Equals D^P(conj Q)(0).
inline Rational monomial_inner(const Polynomial<Rational>& p, const Polynomial<Rational>& q) {
  Rational s(0);
  for (const auto& [k, pc] : p.terms) {
    auto it = q.terms.find(k);
    if (it == q.terms.end()) continue;
    Rational f(1);
    for (int i = 0; i < kNumVars; ++i)
      for (int e = 2; e <= k[i]; ++e) f *= e;
    s += f * pc * it->second;
  }
  return s;
}

}  // namespace cayley
