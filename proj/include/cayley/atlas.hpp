#pragma once

#include "cayley/embedding.hpp"
#include "cayley/jordan.hpp"
#include "cayley/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// The 24-chart holomorphic atlas of X_O. Charts are labelled by the
/// nonzero pivot coordinate, one of {z_i, w_i, y_i, v_i, x_i, u_i}.
namespace atlas {

/// Polynomials over Q(i) in the 27 split coordinates
/// a_1..a_27 = (xi1, xi2, xi3, z1..z4, w1..w4, y1..y4, v1..v4, x1..x4,
/// u1..u4), stored 0-based.
using PolyC = Polynomial<CQ>;

/// Chart label: the 0-based index (3..26) of the pivot coordinate.
struct ChartId {
  int pivot;

  friend bool operator==(const ChartId& a, const ChartId& b) { return a.pivot == b.pivot; }
};

/// Names a_4..a_27 in the conventional lettering (z, w, y, v, x, u).
std::string coord_name(int index);
ChartId chart_by_name(const std::string& name);
std::vector<ChartId> all_charts();

/// Chart coordinates: the 16 independent coordinate values, ordered by
/// ascending global coordinate index.
template <class T>
using Coords16 = std::array<T, 16>;

/// One triangular solution step: eq = coeff * var + rest with coeff a
/// monomial in the pivot, so var = -rest / coeff wherever the pivot is
/// nonzero.
struct PlanStep {
  int var;
  PolyC coeff;
  PolyC rest;
};

/// Solve plan for one chart: the independent coordinate indices
/// (ascending), the dependent ones, and the ordered steps.
struct ChartPlan {
  ChartId id;
  std::array<int, 16> independent;
  std::array<int, 11> dependent;
  std::vector<PlanStep> steps;
};

/// The plan is generated once per chart from the quadric equations, then
/// cached; generation mirrors the selection argument used for O_{z1}.
const ChartPlan& plan(ChartId id);

/// The defining scalar equations of X_O (the components of A^2 = 0) as
/// polynomials, used as the residual oracle.
const std::vector<PolyC>& defining_equations();

/// Reconstruct the full 27-vector from chart coordinates. T is a complex
/// scalar type (CQ exact, CD float, dual-carrying variants for Jacobians).
template <class T>
std::array<T, 27> solve_chart(ChartId id, const Coords16<T>& coords);

/// Chart coordinates of a point (projection onto the chart independents).
template <class T>
Coords16<T> project(ChartId id, const std::array<T, 27>& v);

/// Transition map between charts.
template <class T>
Coords16<T> transition(ChartId from, ChartId to, const Coords16<T>& c);

/// Holomorphic Jacobian of the transition map, by forward-mode dual
/// differentiation of the rational formulas. Exact over CQ.
std::vector<std::vector<CQ>> jacobian_matrix(ChartId from, ChartId to, const Coords16<CQ>& c);
CQ jacobian_det(ChartId from, ChartId to, const Coords16<CQ>& c);
CD jacobian_det_d(ChartId from, ChartId to, const Coords16<CD>& c);

/// Sign s_p in Omega = s_p / pivot^5 dzeta_1 ^ ... ^ dzeta_16 making the
/// local sections glue against the reference chart O_{z1}; computed exactly
/// once per chart and cached.
Rational omega_sign(ChartId id);

/// Value of Omega_O at the point with the given chart coordinates on a
/// frame of 16 holomorphic tangent vectors expressed in chart coordinates
/// (frame[j] is the j-th vector).
template <class T>
T cy_form_value(ChartId id, const Coords16<T>& coords, const std::array<Coords16<T>, 16>& frame);

/// Chart containing the point with the largest pivot magnitude.
ChartId best_chart(const Vec27<double>& v);

/// Exact rational sample of X_O through a chart.
std::array<CQ, 27> sample_exact(Rng& rng, ChartId id);

/// Largest residual of the defining equations at a point (max |.|^2 over
/// the scalar equations; exactly zero on X_O in rational mode).
Rational residual_max(const std::array<CQ, 27>& v);
double residual_max(const std::array<CD, 27>& v);

/// (Omega ^ conj Omega) / Liouville on a common frame at A = tau(X,Y),
/// evaluated through the Darboux parameterization. The measured value is
/// c ||A||^14 with a point-independent constant c; the verification report
/// compares c against the published value.
struct TopFormRatio {
  double ratio;        ///< |Omega ^ bar Omega| / |Liouville|
  double liouville;    ///< Pfaffian of the canonical pairings (+-1)
  CD omega_sq_value;   ///< raw complex value of Omega ^ bar Omega on the frame
};
TopFormRatio omega_liouville_ratio(const CotangentPoint& p);
inline TopFormRatio omega_liouville_ratio(const EmbeddedPoint& e) {
  return omega_liouville_ratio(tau_inv(e));
}

/// {q o tau^-1}^*(dv_P2O) ^ bar Omega against the Liouville form: returns
/// the measured constant c in c * ||A||^3. Uses the intrinsic Riemann
/// volume form of the chart metric.
struct PairingMeasurement {
  double constant;      ///< |pairing| / (||A||^3 |Liouville|)
  double ratio_raw;     ///< |pairing| / |Liouville|
  CD raw_value;
};
PairingMeasurement riemann_pairing_constant(const CotangentPoint& p);
inline PairingMeasurement riemann_pairing_constant(const EmbeddedPoint& e) {
  return riemann_pairing_constant(tau_inv(e));
}

/// Complex rank of the 27 x n matrix of samples (columns).
int span_rank(const std::vector<Vec27<double>>& samples, double tol = 1e-9);
inline int span_rank(const std::vector<EmbeddedPoint>& samples, double tol = 1e-9) {
  std::vector<Vec27<double>> v;
  v.reserve(samples.size());
  for (const auto& e : samples) v.push_back(to_vec27(e.a));
  return span_rank(v, tol);
}

/// Rank of the 3 x 27 gradient of (T1, T2, T3) at a point given in the
/// octonion-basis coordinates.
int trace_form_gradient_rank(const std::array<CD, 27>& oct_point, double tol = 1e-9);
inline int trace_form_gradient_rank(const EmbeddedPoint& e, double tol = 1e-9) {
  return trace_form_gradient_rank(oct_coords(e.a), tol);
}

}  // namespace atlas
}  // namespace cayley
