#pragma once

#include "cayley/scalar.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace cayley {

/// 2x2 matrix over a scalar ring, entries row-major: m[0]=a11, m[1]=a12,
/// m[2]=a21, m[3]=a22. This is the C(2) factor of the split picture
/// O ~ C(2) + C(2)e4.
template <class S>
struct Mat2 {
  std::array<S, 4> m{};

  static Mat2 zero() { return {}; }
  static Mat2 identity() {
    Mat2 r;
    r.m[0] = S(1);
    r.m[3] = S(1);
    return r;
  }

  Mat2 operator-() const { return {{-m[0], -m[1], -m[2], -m[3]}}; }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend Mat2 operator*(const S& c, const Mat2& a) {
    return {{c * a.m[0], c * a.m[1], c * a.m[2], c * a.m[3]}};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }

  /// Quaternion conjugation in matrix form: [[a,b],[c,d]] -> [[d,-b],[-c,a]].
  Mat2 theta() const { return {{m[3], -m[1], -m[2], m[0]}}; }

  S det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// Split form Z + W e4 of an octonion with entries in the scalar ring S.
template <class S>
struct SplitPair {
  Mat2<S> Z;
  Mat2<S> W;

  /// Product rule read off the displayed system: for a = Za + Wa e4 and
  /// b = Zb + Wb e4,  a b = (Za Zb - theta(Wb) Wa) + (Wb Za + Wa theta(Zb)) e4.
  friend SplitPair operator*(const SplitPair& a, const SplitPair& b) {
    return {a.Z * b.Z - b.W.theta() * a.W, b.W * a.Z + a.W * b.Z.theta()};
  }
  friend SplitPair operator+(const SplitPair& a, const SplitPair& b) {
    return {a.Z + b.Z, a.W + b.W};
  }
  friend bool operator==(const SplitPair& a, const SplitPair& b) {
    return a.Z == b.Z && a.W == b.W;
  }

  SplitPair theta() const { return {Z.theta(), -W}; }
};

namespace detail {

/// Signed entry of the 8x8 multiplication table: e_i e_j = sign * e_index.
struct TableEntry {
  std::int8_t sign;
  std::uint8_t index;
};

/// Generates the table from the split product rule; never hand-entered.
/// e_0..e_3 sit in the C(2) factor via the quaternion representation,
/// e_{i+4} = e_i e_4 sits in the C(2)e4 factor.
std::array<std::array<TableEntry, 8>, 8> build_octonion_table();

inline const std::array<std::array<TableEntry, 8>, 8>& octonion_table() {
  static const auto table = build_octonion_table();
  return table;
}

}  // namespace detail

/// Octonion with coefficients in a commutative scalar ring S (S is
/// Complex<Rational> in exact mode, Complex<double> in float mode, and a
/// polynomial ring when equations are generated symbolically).
template <class S>
struct Octonion {
  std::array<S, 8> c{};

  Octonion() = default;
  explicit Octonion(std::array<S, 8> coeffs) : c(std::move(coeffs)) {}

  static Octonion zero() { return {}; }
  static Octonion unit(int i) {
    Octonion r;
    r.c[static_cast<std::size_t>(i)] = S(1);
    return r;
  }
  static Octonion scalar(const S& s) {
    Octonion r;
    r.c[0] = s;
    return r;
  }

  Octonion operator-() const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }
  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(const S& s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
  friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& v : c)
      if (!(v == S(0))) return false;
    return true;
  }
};

/// Nonassociative product via the generated signed table. Bilinear over S.
template <class S>
Octonion<S> oct_mul(const Octonion<S>& a, const Octonion<S>& b) {
  const auto& table = detail::octonion_table();
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == S(0)) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == S(0)) continue;
      const auto& e = table[i][j];
      S term = a.c[i] * b.c[j];
      if (e.sign < 0)
        r.c[e.index] -= term;
      else
        r.c[e.index] += term;
    }
  }
  return r;
}

/// Conjugation theta(h) = h0 - sum h_i e_i. An anti-automorphism.
template <class S>
Octonion<S> oct_theta(const Octonion<S>& a) {
  Octonion<S> r;
  r.c[0] = a.c[0];
  for (int i = 1; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

template <class S>
S oct_real_part(const Octonion<S>& a) { return a.c[0]; }

/// Bilinear norm form Q(a) = sum a_i^2, extended C-bilinearly in complex
/// mode. Satisfies a * theta(a) = Q(a) e0 and Q(ab) = Q(a) Q(b).
template <class S>
S oct_norm_form(const Octonion<S>& a) {
  S q = a.c[0] * a.c[0];
  for (int i = 1; i < 8; ++i) q += a.c[i] * a.c[i];
  return q;
}

/// Hermitian squared norm sum |a_i|^2 of a complexified octonion; this is
/// the |a|^2 entering ||A|| on the complexified Jordan algebra.
template <class F>
F oct_herm_norm_sq(const Octonion<Complex<F>>& a) {
  F s = abs_sq(a.c[0]);
  for (int i = 1; i < 8; ++i) s += abs_sq(a.c[i]);
  return s;
}

/// Coefficientwise complex conjugation (the overline, distinct from theta).
template <class F>
Octonion<Complex<F>> oct_conj(const Octonion<Complex<F>>& a) {
  Octonion<Complex<F>> r;
  for (int i = 0; i < 8; ++i) r.c[i] = conj(a.c[i]);
  return r;
}

/// Bilinear pairing <a,b> = sum a_i b_i (the R^8 inner product, extended
/// C-bilinearly).
template <class S>
S oct_pair(const Octonion<S>& a, const Octonion<S>& b) {
  S s = a.c[0] * b.c[0];
  for (int i = 1; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

/// rho_O: coefficients -> split pair. The quaternion part maps by rho_H,
/// the e4 part likewise: Z = [[c0+ic1, c2+ic3],[-c2+ic3, c0-ic1]].
template <class F>
SplitPair<Complex<F>> oct_to_split(const Octonion<Complex<F>>& a) {
  using C = Complex<F>;
  const C i = C::i();
  SplitPair<C> p;
  p.Z.m = {a.c[0] + i * a.c[1], a.c[2] + i * a.c[3], -a.c[2] + i * a.c[3], a.c[0] - i * a.c[1]};
  p.W.m = {a.c[4] + i * a.c[5], a.c[6] + i * a.c[7], -a.c[6] + i * a.c[7], a.c[4] - i * a.c[5]};
  return p;
}

/// Inverse of rho_O per the matrix-to-vector formula.
template <class F>
Octonion<Complex<F>> oct_from_split(const SplitPair<Complex<F>>& p) {
  using C = Complex<F>;
  const C half(F(1) / F(2));
  const C half_over_i = half / C::i();
  Octonion<C> a;
  a.c[0] = (p.Z.m[0] + p.Z.m[3]) * half;
  a.c[1] = (p.Z.m[0] - p.Z.m[3]) * half_over_i;
  a.c[2] = (p.Z.m[1] - p.Z.m[2]) * half;
  a.c[3] = (p.Z.m[1] + p.Z.m[2]) * half_over_i;
  a.c[4] = (p.W.m[0] + p.W.m[3]) * half;
  a.c[5] = (p.W.m[0] - p.W.m[3]) * half_over_i;
  a.c[6] = (p.W.m[1] - p.W.m[2]) * half;
  a.c[7] = (p.W.m[1] + p.W.m[2]) * half_over_i;
  return a;
}

}  // namespace cayley
