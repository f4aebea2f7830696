#pragma once

#include "cayley/plane.hpp"

#include <Eigen/Dense>

namespace cayley {

/// Point of the punctured cotangent bundle, cotangent identified with
/// tangent through the metric.
struct CotangentPoint {
  PlanePoint x;
  TangentVector y;
};

/// Point of X_O = {A != 0, A^2 = 0} inside the complexified Jordan algebra.
struct EmbeddedPoint {
  JordanElement<CD> a;
};

/// tau(X,Y) = ||Y||^2 X - Y^2 + i ||Y|| Y / sqrt(2), generic over the real
/// scalar type.
template <class R>
JordanElement<Complex<R>> tau_t(const JordanElement<Complex<R>>& x,
                                const JordanElement<Complex<R>>& y) {
  using C = Complex<R>;
  using std::sqrt;
  R nsq = norm_sq(y);
  R n = sqrt(nsq);
  JordanElement<C> a = C(nsq) * x - jordan_product(y, y);
  C if_(R(0), n / sqrt(R(2)));
  return a + if_ * y;
}

inline EmbeddedPoint tau(const CotangentPoint& p) {
  if (norm_sq(p.y.y) <= 0.0) throw std::domain_error("tau: Y = 0 is excluded (punctured bundle)");
  return {tau_t<double>(p.x.a, p.y.y)};
}

/// Residuals of the image constraints: ||A^2|| and |tr A|.
inline std::pair<double, double> embedded_residual(const EmbeddedPoint& e) {
  auto [sq, res] = matrix_square_residual(e.a);
  (void)res;
  return {std::sqrt(norm_sq(sq)), abs_c(trace(e.a))};
}

/// Inverse: X(A) = (A + conj A)/(2||A||) + (A o conj A)/||A||^2,
/// Y(A) = -(i/sqrt 2) ||A||^{-1/2} (A - conj A).
inline CotangentPoint tau_inv(const EmbeddedPoint& e, double residual_tol = 1e-8) {
  double nsq = norm_sq(e.a);
  if (nsq <= 0.0) throw std::domain_error("tau_inv: A = 0 is not in X_O");
  auto [sq_norm, tr_norm] = embedded_residual(e);
  if (sq_norm > residual_tol * nsq || tr_norm > residual_tol * std::sqrt(nsq))
    throw std::domain_error("tau_inv: A^2 = 0 or tr A = 0 violated beyond tolerance");
  double n = std::sqrt(nsq);
  JordanElement<CD> bar = jordan_conj(e.a);
  JordanElement<CD> x =
      CD(0.5 / n) * (e.a + bar) + CD(1.0 / nsq) * jordan_product(e.a, bar);
  CD factor = CD(0.0, -1.0 / std::sqrt(2.0)) * CD(1.0 / std::sqrt(n));
  JordanElement<CD> y = factor * (e.a - bar);
  return {{x}, {y}};
}

/// g0 = exp(-sqrt(2) pi ||A||^{1/2}) = exp(-sqrt(2) pi ||Y||).
inline double g0_weight(const EmbeddedPoint& e) {
  return std::exp(-std::sqrt(2.0) * M_PI * std::sqrt(std::sqrt(norm_sq(e.a))));
}

/// Darboux parameterization of T*_0 over the W1 chart:
/// x = (b, c, beta, gamma) in R^32 with covector components (beta, gamma).
/// Returns tau(M(b,c), Y) where Y is metric-dual to the covector.
JordanElement<CD> darboux_psi(const std::array<double, 32>& x);

/// The base/tangent pair of the parameterization (before tau).
CotangentPoint darboux_point(const std::array<double, 32>& x);

/// Darboux coordinates of a cotangent point whose base lies in the chart.
std::array<double, 32> darboux_coords(const CotangentPoint& p);

/// Canonical symplectic matrix in the Darboux frame, normalized so that
/// omega(d/db_i, d/dbeta_j) = +delta_ij.
Eigen::Matrix<double, 32, 32> canonical_omega();

/// Pullback of sqrt(-2) dbar d ||A||^{1/2} through tau in the Darboux frame,
/// by nested central finite differences of the potential.
Eigen::Matrix<double, 32, 32> kahler_form_fd(const std::array<double, 32>& x, double step);

/// Max-entry difference between the finite-difference Kaehler matrix and the
/// canonical symplectic matrix.
double symplectic_residual(const std::array<double, 32>& x, double step);
inline double symplectic_residual(const CotangentPoint& p, double step) {
  return symplectic_residual(darboux_coords(p), step);
}

/// Residual of the one-form identity
/// tau^*(sqrt(2) i  d' ||A||^{1/2}) - theta = (i/sqrt 2) d||Y||
/// along a direction in Darboux coordinates.
double one_form_residual(const std::array<double, 32>& x, const std::array<double, 32>& dir,
                         double step = 1e-6);
inline double one_form_residual(const CotangentPoint& p, const std::array<double, 32>& dir,
                                double step = 1e-6) {
  return one_form_residual(darboux_coords(p), dir, step);
}

/// Dilation T_t(A) = tA, corresponding to (X, sqrt(t) Y) upstairs, plus the
/// geodesic flow phi_t(A) = e^{2it} A.
inline EmbeddedPoint dilate(const EmbeddedPoint& e, double t) {
  if (t <= 0.0) throw std::domain_error("dilate: t must be positive");
  return {CD(t) * e.a};
}
inline EmbeddedPoint flow(const EmbeddedPoint& e, double t) {
  return {CD(std::cos(2 * t), std::sin(2 * t)) * e.a};
}

/// Random cotangent point through the W1 chart with ||Y|| in [0.5, 2].
CotangentPoint sample_cotangent(Rng& rng);

}  // namespace cayley
