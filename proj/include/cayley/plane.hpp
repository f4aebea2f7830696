#pragma once

#include "cayley/jordan.hpp"
#include "cayley/rng.hpp"

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <vector>

namespace cayley {

/// Point of the Cayley projective plane: a real trace-1 idempotent of J(3).
struct PlanePoint {
  JordanElement<CD> a;
};

/// Chart coordinates around X1: two real octonions (b, c) with
/// |b|^2 + |c|^2 < 1/8, serialized b-coefficients first.
struct ChartW1Coords {
  std::array<double, 16> bc{};  // b0..b7, c0..c7

  double norm_b_sq() const {
    double s = 0;
    for (int i = 0; i < 8; ++i) s += bc[i] * bc[i];
    return s;
  }
  double norm_c_sq() const {
    double s = 0;
    for (int i = 8; i < 16; ++i) s += bc[i] * bc[i];
    return s;
  }
};

/// Tangent vector at a plane point: real Jordan element with X o Y = Y/2 and
/// tr Y = 0.
struct TangentVector {
  JordanElement<CD> y;
};

/// Chart map M(b,c), generic over the real scalar so derivatives can be
/// taken with dual numbers. Solves t1, then a = theta(bc)/t1, then t2 and
/// t3 = 1 - t1 - t2.
template <class R>
JordanElement<Complex<R>> chart_point_t(const std::array<R, 16>& bc) {
  using C = Complex<R>;
  using std::sqrt;
  Octonion<C> b, c;
  for (int i = 0; i < 8; ++i) {
    b.c[i] = C(bc[i]);
    c.c[i] = C(bc[8 + i]);
  }
  R nb(0), nc(0);
  for (int i = 0; i < 8; ++i) {
    nb += bc[i] * bc[i];
    nc += bc[8 + i] * bc[8 + i];
  }
  R quarter = R(1) / R(4);
  R t1 = R(1) / R(2) + sqrt(quarter - nb - nc);
  Octonion<C> a = (C(R(1) / t1)) * oct_theta(oct_mul(b, c));
  R na(0);
  for (int i = 0; i < 8; ++i) na += a.c[i].re * a.c[i].re;
  R t2 = R(1) / R(2) - sqrt(quarter - nc - na);
  R t3 = R(1) - t1 - t2;

  JordanElement<C> m;
  m.xi = {C(t1), C(t2), C(t3)};
  m.z = c;
  m.y = b;
  m.x = a;
  return m;
}

/// Chart map at double precision with the domain check.
inline PlanePoint chart_point(const ChartW1Coords& coords) {
  if (coords.norm_b_sq() + coords.norm_c_sq() >= 0.125)
    throw std::domain_error("chart_point: |b|^2 + |c|^2 must be < 1/8");
  return {chart_point_t<double>(coords.bc)};
}

/// Residual of the defining conditions X o X = X, tr X = 1.
inline double plane_point_residual(const PlanePoint& p) {
  JordanElement<CD> d = jordan_product(p.a, p.a) - p.a;
  double r = std::sqrt(norm_sq(d));
  r += std::abs(trace(p.a).re - 1.0) + std::abs(trace(p.a).im);
  return r;
}

/// Pushforward frame dM_i of the chart map at (b,c), via dual numbers.
inline std::array<JordanElement<CD>, 16> chart_frame(const ChartW1Coords& coords) {
  std::array<JordanElement<CD>, 16> frame;
  for (int dir = 0; dir < 16; ++dir) {
    std::array<Dual<double>, 16> seeded;
    for (int i = 0; i < 16; ++i) seeded[i] = Dual<double>(coords.bc[i], i == dir ? 1.0 : 0.0);
    auto jd = chart_point_t<Dual<double>>(seeded);
    JordanElement<CD> d;
    for (int i = 0; i < 3; ++i) d.xi[i] = {jd.xi[i].re.d, jd.xi[i].im.d};
    for (int i = 0; i < 8; ++i) {
      d.z.c[i] = {jd.z.c[i].re.d, jd.z.c[i].im.d};
      d.y.c[i] = {jd.y.c[i].re.d, jd.y.c[i].im.d};
      d.x.c[i] = {jd.x.c[i].re.d, jd.x.c[i].im.d};
    }
    frame[dir] = d;
  }
  return frame;
}

/// Metric on the chart, as the Gram matrix of the normalized frame
/// {dM_i / sqrt(2)}; in this normalization the matrix is the identity at
/// (0,0) and the fiber radius satisfies ||Y||^2 = p^T g^{-1} p for the
/// momenta used by the Darboux parameterization. volume_density is the
/// density of the Riemann volume form against the normalized coframe.
struct MetricFrame {
  Eigen::Matrix<double, 16, 16> g;
  double volume_density;
  std::array<JordanElement<CD>, 16> frame;  ///< plain (unnormalized) dM_i
};

inline MetricFrame metric_and_volume_frame(const ChartW1Coords& coords) {
  MetricFrame mf{Eigen::Matrix<double, 16, 16>::Zero(), 0.0, chart_frame(coords)};
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j <= i; ++j) {
      double v = 0.5 * trace_inner(mf.frame[i], mf.frame[j]).re;
      mf.g(i, j) = v;
      mf.g(j, i) = v;
    }
  mf.volume_density = std::sqrt(mf.g.determinant());
  return mf;
}

/// Basis of the kernel of Y -> X o Y - Y/2 on trace-zero real elements.
/// The dimension must be 16; anything else raises a diagnostic failure.
inline std::vector<TangentVector> tangent_space_basis(const PlanePoint& x, double tol = 1e-10) {
  Eigen::MatrixXd m(28, 27);
  for (int col = 0; col < 27; ++col) {
    std::array<CD, 27> e{};
    e[col] = CD(1.0);
    JordanElement<CD> basis;
    for (int i = 0; i < 8; ++i) {
      basis.z.c[i] = e[i];
      basis.y.c[i] = e[8 + i];
      basis.x.c[i] = e[16 + i];
    }
    basis.xi = {e[24], e[25], e[26]};
    JordanElement<CD> img = jordan_product(x.a, basis) - CD(0.5) * basis;
    auto v = oct_coords(img);
    for (int row = 0; row < 27; ++row) m(row, col) = v[row].re;
    m(27, col) = (col >= 24) ? 1.0 : 0.0;  // trace-zero constraint
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * sv(0);
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < cutoff) ++null_dim;
  if (null_dim != 16)
    throw std::runtime_error("tangent_space_basis: numerical kernel dimension is not 16");

  std::vector<TangentVector> basis;
  basis.reserve(16);
  for (int k = 27 - null_dim; k < 27; ++k) {
    JordanElement<CD> y;
    auto col = svd.matrixV().col(k);
    for (int i = 0; i < 8; ++i) {
      y.z.c[i] = CD(col(i));
      y.y.c[i] = CD(col(8 + i));
      y.x.c[i] = CD(col(16 + i));
    }
    y.xi = {CD(col(24)), CD(col(25)), CD(col(26))};
    basis.push_back({y});
  }
  return basis;
}

/// Diagonal permutation automorphisms sigma_1, sigma_2, sigma_3 of J(3)
/// (conjugation by the three transposition matrices).
template <class S>
JordanElement<S> sigma_permute(int which, const JordanElement<S>& a) {
  JordanElement<S> r;
  switch (which) {
    case 1:  // swap rows/cols 1,2
      r.xi = {a.xi[1], a.xi[0], a.xi[2]};
      r.z = oct_theta(a.z);
      r.y = oct_theta(a.x);
      r.x = oct_theta(a.y);
      break;
    case 2:  // swap rows/cols 1,3
      r.xi = {a.xi[2], a.xi[1], a.xi[0]};
      r.z = oct_theta(a.x);
      r.x = oct_theta(a.z);
      r.y = oct_theta(a.y);
      break;
    case 3:  // swap rows/cols 2,3
      r.xi = {a.xi[0], a.xi[2], a.xi[1]};
      r.z = oct_theta(a.y);
      r.y = oct_theta(a.z);
      r.x = oct_theta(a.x);
      break;
    default:
      throw std::invalid_argument("sigma_permute: which must be 1, 2 or 3");
  }
  return r;
}

/// Random chart coordinates strictly inside the domain.
inline ChartW1Coords sample_chart(Rng& rng, double radius_fraction = 0.8) {
  ChartW1Coords c;
  double s = 0;
  for (auto& v : c.bc) {
    v = rng.normal();
    s += v * v;
  }
  double target = radius_fraction * std::sqrt(0.125) * rng.uniform(0.1, 1.0);
  for (auto& v : c.bc) v *= target / std::sqrt(s);
  return c;
}

}  // namespace cayley
