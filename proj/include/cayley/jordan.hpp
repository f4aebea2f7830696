#pragma once

#include "cayley/octonion.hpp"

#include <array>
#include <tuple>

namespace cayley {

/// Element of the exceptional Jordan algebra J(3) (or its complexification,
/// depending on the scalar ring): three diagonal scalars and the three
/// octonions z (1,2), y (3,1), x (2,3); the theta-mirrored entries are
/// implied.
template <class S>
struct JordanElement {
  std::array<S, 3> xi{};
  Octonion<S> z, y, x;

  static JordanElement zero() { return {}; }
  static JordanElement identity() {
    JordanElement r;
    r.xi = {S(1), S(1), S(1)};
    return r;
  }
  static JordanElement diag(S a, S b, S c) {
    JordanElement r;
    r.xi = {std::move(a), std::move(b), std::move(c)};
    return r;
  }

  JordanElement operator-() const {
    JordanElement r;
    for (int i = 0; i < 3; ++i) r.xi[i] = -xi[i];
    r.z = -z;
    r.y = -y;
    r.x = -x;
    return r;
  }
  JordanElement& operator+=(const JordanElement& o) {
    for (int i = 0; i < 3; ++i) xi[i] += o.xi[i];
    z += o.z;
    y += o.y;
    x += o.x;
    return *this;
  }
  JordanElement& operator-=(const JordanElement& o) {
    for (int i = 0; i < 3; ++i) xi[i] -= o.xi[i];
    z -= o.z;
    y -= o.y;
    x -= o.x;
    return *this;
  }
  friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
  friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
  friend JordanElement operator*(const S& c, const JordanElement& a) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) r.xi[i] = c * a.xi[i];
    r.z = c * a.z;
    r.y = c * a.y;
    r.x = c * a.x;
    return r;
  }
  friend bool operator==(const JordanElement& a, const JordanElement& b) {
    return a.xi == b.xi && a.z == b.z && a.y == b.y && a.x == b.x;
  }
  friend bool operator!=(const JordanElement& a, const JordanElement& b) { return !(a == b); }
};

/// Full 3x3 octonion matrix; intermediate for matrix products, which are
/// generally not theta-Hermitian.
template <class S>
using OctMat3 = std::array<std::array<Octonion<S>, 3>, 3>;

template <class S>
OctMat3<S> to_matrix(const JordanElement<S>& a) {
  OctMat3<S> m;
  m[0][0] = Octonion<S>::scalar(a.xi[0]);
  m[1][1] = Octonion<S>::scalar(a.xi[1]);
  m[2][2] = Octonion<S>::scalar(a.xi[2]);
  m[0][1] = a.z;
  m[1][0] = oct_theta(a.z);
  m[2][0] = a.y;
  m[0][2] = oct_theta(a.y);
  m[1][2] = a.x;
  m[2][1] = oct_theta(a.x);
  return m;
}

/// Reads a theta-Hermitian matrix back into the compact form. Entries below
/// the diagonal are implied and not checked here.
template <class S>
JordanElement<S> from_matrix(const OctMat3<S>& m) {
  JordanElement<S> a;
  a.xi = {m[0][0].c[0], m[1][1].c[0], m[2][2].c[0]};
  a.z = m[0][1];
  a.y = m[2][0];
  a.x = m[1][2];
  return a;
}

/// Plain matrix product. Every entry is a sum of two-factor octonion
/// products; no triple products arise, so no association choice is made.
template <class S>
OctMat3<S> mat_mul(const OctMat3<S>& a, const OctMat3<S>& b) {
  OctMat3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Octonion<S> s;
      for (int k = 0; k < 3; ++k) s += oct_mul(a[i][k], b[k][j]);
      r[i][j] = s;
    }
  return r;
}

/// Jordan product A o B = (AB + BA)/2. For theta-Hermitian A, B one has
/// BA = theta-transpose of AB, so a single matrix product suffices.
template <class S>
JordanElement<S> jordan_product(const JordanElement<S>& a, const JordanElement<S>& b) {
  OctMat3<S> ab = mat_mul(to_matrix(a), to_matrix(b));
  OctMat3<S> m;
  const S half = S(1) / S(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = half * (ab[i][j] + oct_theta(ab[j][i]));
  return from_matrix(m);
}

/// Associative square A^2 (= A o A since A commutes with itself).
template <class S>
OctMat3<S> mat_square(const JordanElement<S>& a) {
  OctMat3<S> m = to_matrix(a);
  return mat_mul(m, m);
}

/// The six octonion residuals of A^2 = 0: three off-diagonal equations
/// (xi_i+xi_j)-type and three diagonal ones xi_i^2 + norm forms. All six
/// vanish iff A^2 = 0.
template <class S>
std::pair<JordanElement<S>, std::array<Octonion<S>, 6>> matrix_square_residual(
    const JordanElement<S>& a) {
  OctMat3<S> sq = mat_square(a);
  std::array<Octonion<S>, 6> res;
  res[0] = sq[0][0];  // xi1^2 + z theta(z) + theta(y) y
  res[1] = sq[1][1];  // xi2^2 + theta(z) z + x theta(x)
  res[2] = sq[2][2];  // xi3^2 + theta(x) x + y theta(y)
  res[3] = sq[0][1];  // (xi1+xi2) z + theta(x y)
  res[4] = sq[2][0];  // (xi3+xi1) y + theta(z x)
  res[5] = sq[1][2];  // (xi2+xi3) x + theta(y z)
  return {from_matrix(sq), res};
}

template <class S>
S trace(const JordanElement<S>& a) { return a.xi[0] + a.xi[1] + a.xi[2]; }

/// Bilinear inner product <A,B> = tr(A o B) = sum xi_i eta_i + 2 sum <oct>.
template <class S>
S trace_inner(const JordanElement<S>& a, const JordanElement<S>& b) {
  S s = a.xi[0] * b.xi[0] + a.xi[1] * b.xi[1] + a.xi[2] * b.xi[2];
  S two(2);
  s += two * (oct_pair(a.z, b.z) + oct_pair(a.y, b.y) + oct_pair(a.x, b.x));
  return s;
}

/// Coefficientwise complex conjugate A-bar (not theta).
template <class F>
JordanElement<Complex<F>> jordan_conj(const JordanElement<Complex<F>>& a) {
  JordanElement<Complex<F>> r;
  for (int i = 0; i < 3; ++i) r.xi[i] = conj(a.xi[i]);
  r.z = oct_conj(a.z);
  r.y = oct_conj(a.y);
  r.x = oct_conj(a.x);
  return r;
}

/// Hermitian inner product <A, B-bar>.
template <class F>
Complex<F> herm_inner(const JordanElement<Complex<F>>& a, const JordanElement<Complex<F>>& b) {
  return trace_inner(a, jordan_conj(b));
}

/// ||A||^2 = <A, A-bar>, a nonnegative real scalar.
template <class F>
F norm_sq(const JordanElement<Complex<F>>& a) {
  F s = abs_sq(a.xi[0]) + abs_sq(a.xi[1]) + abs_sq(a.xi[2]);
  s += F(2) * (oct_herm_norm_sq(a.z) + oct_herm_norm_sq(a.y) + oct_herm_norm_sq(a.x));
  return s;
}

/// Trace forms T1 = tr A, T2 = tr(A^2), T3 = tr(A o (A o A)), the latter by
/// the Jordan-power route.
template <class S>
std::tuple<S, S, S> trace_forms(const JordanElement<S>& a) {
  S t1 = trace(a);
  JordanElement<S> sq = jordan_product(a, a);
  S t2 = trace(sq);
  S t3 = trace(jordan_product(a, sq));
  return {t1, t2, t3};
}

/// T3 by the expanded closed formula:
/// sum xi_i^3 + 3(Q(z)(xi1+xi2) + Q(y)(xi3+xi1) + Q(x)(xi2+xi3)) + 6 Re(x(yz)).
template <class S>
S t3_closed(const JordanElement<S>& a) {
  S t = a.xi[0] * a.xi[0] * a.xi[0] + a.xi[1] * a.xi[1] * a.xi[1] + a.xi[2] * a.xi[2] * a.xi[2];
  S three(3);
  t += three * (oct_norm_form(a.z) * (a.xi[0] + a.xi[1]) + oct_norm_form(a.y) * (a.xi[2] + a.xi[0]) +
                oct_norm_form(a.x) * (a.xi[1] + a.xi[2]));
  t += S(6) * oct_real_part(oct_mul(a.x, oct_mul(a.y, a.z)));
  return t;
}

/// The 27-vector in the fixed split ordering
/// (xi1, xi2, xi3, z1..z4, w1..w4, y1..y4, v1..v4, x1..x4, u1..u4).
template <class F>
using Vec27 = std::array<Complex<F>, 27>;

template <class F>
Vec27<F> to_vec27(const JordanElement<Complex<F>>& a) {
  Vec27<F> v;
  v[0] = a.xi[0];
  v[1] = a.xi[1];
  v[2] = a.xi[2];
  auto put = [&](const Octonion<Complex<F>>& o, int base) {
    SplitPair<Complex<F>> p = oct_to_split(o);
    for (int i = 0; i < 4; ++i) v[base + i] = p.Z.m[i];
    for (int i = 0; i < 4; ++i) v[base + 4 + i] = p.W.m[i];
  };
  put(a.z, 3);
  put(a.y, 11);
  put(a.x, 19);
  return v;
}

template <class F>
JordanElement<Complex<F>> from_vec27(const Vec27<F>& v) {
  JordanElement<Complex<F>> a;
  a.xi = {v[0], v[1], v[2]};
  auto get = [&](int base) {
    SplitPair<Complex<F>> p;
    for (int i = 0; i < 4; ++i) p.Z.m[i] = v[base + i];
    for (int i = 0; i < 4; ++i) p.W.m[i] = v[base + 4 + i];
    return oct_from_split(p);
  };
  a.z = get(3);
  a.y = get(11);
  a.x = get(19);
  return a;
}

/// The 27 coordinates in the octonion-basis ordering used by the polynomial
/// theory: (z_0..z_7, y_0..y_7, x_0..x_7, xi_1, xi_2, xi_3).
template <class S>
std::array<S, 27> oct_coords(const JordanElement<S>& a) {
  std::array<S, 27> v;
  for (int i = 0; i < 8; ++i) {
    v[i] = a.z.c[i];
    v[8 + i] = a.y.c[i];
    v[16 + i] = a.x.c[i];
  }
  v[24] = a.xi[0];
  v[25] = a.xi[1];
  v[26] = a.xi[2];
  return v;
}

}  // namespace cayley
