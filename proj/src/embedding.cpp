#include "cayley/embedding.hpp"

namespace cayley {

namespace {

ChartW1Coords base_of(const std::array<double, 32>& x) {
  ChartW1Coords c;
  for (int i = 0; i < 16; ++i) c.bc[i] = x[i];
  return c;
}

/// ||A||^{1/2} as a function of the ambient 27 complex coordinates.
double potential(const JordanElement<CD>& a) { return std::sqrt(std::sqrt(norm_sq(a))); }

JordanElement<CD> j_rotate(const JordanElement<CD>& a) { return CD(0.0, 1.0) * a; }

JordanElement<CD> axpy(const JordanElement<CD>& a, double h, const JordanElement<CD>& w) {
  return a + CD(h) * w;
}

// Branch sign of sqrt(-2) in the Kaehler identity, fixed once against the
// Darboux normalization omega(d/db_i, d/dbeta_j) = +delta_ij and
// cross-checked against the analytic complex-Hessian route.
constexpr double kKahlerBranch = 1.0;

}  // namespace

CotangentPoint darboux_point(const std::array<double, 32>& x) {
  ChartW1Coords bc = base_of(x);
  MetricFrame mf = metric_and_volume_frame(bc);
  Eigen::Matrix<double, 16, 1> p;
  for (int i = 0; i < 16; ++i) p(i) = x[16 + i];
  // Momenta pair against the chart frame through half the trace form; this
  // is the unique scale for which the canonical one-form satisfies the
  // basic equation with the weight g0 = exp(-sqrt(2) pi ||Y||).
  Eigen::Matrix<double, 16, 1> coef = mf.g.ldlt().solve(p);
  JordanElement<CD> y;
  for (int i = 0; i < 16; ++i) y += CD(coef(i)) * mf.frame[i];
  PlanePoint base{chart_point_t<double>(bc.bc)};
  return {base, {y}};
}

JordanElement<CD> darboux_psi(const std::array<double, 32>& x) {
  CotangentPoint p = darboux_point(x);
  return tau_t<double>(p.x.a, p.y.y);
}

std::array<double, 32> darboux_coords(const CotangentPoint& p) {
  std::array<double, 32> x{};
  // Base coordinates are the b (y-slot) and c (z-slot) octonion entries.
  for (int i = 0; i < 8; ++i) {
    x[i] = p.x.a.y.c[i].re;
    x[8 + i] = p.x.a.z.c[i].re;
  }
  ChartW1Coords bc = base_of(x);
  MetricFrame mf = metric_and_volume_frame(bc);
  for (int i = 0; i < 16; ++i) x[16 + i] = 0.5 * trace_inner(p.y.y, mf.frame[i]).re;
  return x;
}

Eigen::Matrix<double, 32, 32> canonical_omega() {
  Eigen::Matrix<double, 32, 32> w = Eigen::Matrix<double, 32, 32>::Zero();
  for (int i = 0; i < 16; ++i) {
    w(i, 16 + i) = 1.0;
    w(16 + i, i) = -1.0;
  }
  return w;
}

Eigen::Matrix<double, 32, 32> kahler_form_fd(const std::array<double, 32>& x, double step) {
  // eta_j(x) = -d(potential)(J dPsi(e_j)), with both differentials taken by
  // central differences; the 2-form is then d(eta) by an outer difference.
  auto eta = [&](const std::array<double, 32>& at, int j) {
    std::array<double, 32> xp = at, xm = at;
    xp[j] += step;
    xm[j] -= step;
    JordanElement<CD> ap = darboux_psi(xp), am = darboux_psi(xm);
    JordanElement<CD> v = CD(1.0 / (2.0 * step)) * (ap - am);
    JordanElement<CD> a = darboux_psi(at);
    JordanElement<CD> jv = j_rotate(v);
    double hp = step;  // ambient step for the potential difference
    double dphi = (potential(axpy(a, hp, jv)) - potential(axpy(a, -hp, jv))) / (2.0 * hp);
    return -dphi;
  };

  Eigen::Matrix<double, 32, 32> f = Eigen::Matrix<double, 32, 32>::Zero();
  for (int i = 0; i < 32; ++i) {
    std::array<double, 32> xp = x, xm = x;
    xp[i] += step;
    xm[i] -= step;
    for (int j = 0; j < 32; ++j) {
      if (i == j) continue;
      f(i, j) += (eta(xp, j) - eta(xm, j)) / (2.0 * step);
    }
  }
  Eigen::Matrix<double, 32, 32> form = f - f.transpose();
  // sqrt(-2) dbar d phi = sqrt(-2) (i/2) d eta; the branch of sqrt(-2) is
  // fixed so the result matches the canonical normalization below.
  return kKahlerBranch * 0.5 * std::sqrt(2.0) * form;
}

double symplectic_residual(const std::array<double, 32>& x, double step) {
  Eigen::Matrix<double, 32, 32> k = kahler_form_fd(x, step);
  return (k - canonical_omega()).cwiseAbs().maxCoeff();
}

double one_form_residual(const std::array<double, 32>& x, const std::array<double, 32>& dir,
                         double step) {
  // dPsi(dir) by a central difference.
  std::array<double, 32> xp = x, xm = x;
  for (int i = 0; i < 32; ++i) {
    xp[i] += step * dir[i];
    xm[i] -= step * dir[i];
  }
  JordanElement<CD> a = darboux_psi(x);
  JordanElement<CD> v = CD(1.0 / (2.0 * step)) * (darboux_psi(xp) - darboux_psi(xm));

  // d' phi (v) = (dphi(v) - i dphi(Jv)) / 2 via two real differences.
  double hp = step;
  auto dphi_along = [&](const JordanElement<CD>& w) {
    return (potential(axpy(a, hp, w)) - potential(axpy(a, -hp, w))) / (2.0 * hp);
  };
  CD dprime(0.5 * dphi_along(v), -0.5 * dphi_along(j_rotate(v)));
  CD lhs = CD(0.0, std::sqrt(2.0)) * dprime;

  // canonical one-form theta(dir) = sum p_i dq_i(dir)
  double theta = 0.0;
  for (int i = 0; i < 16; ++i) theta += x[16 + i] * dir[i];
  lhs -= CD(theta);

  // right-hand side (i/sqrt 2) d||Y||(dir)
  auto ynorm = [&](const std::array<double, 32>& at) {
    return std::sqrt(norm_sq(darboux_point(at).y.y));
  };
  double dny = (ynorm(xp) - ynorm(xm)) / (2.0 * step);
  CD rhs(0.0, dny / std::sqrt(2.0));
  return abs_c(lhs - rhs);
}

CotangentPoint sample_cotangent(Rng& rng) {
  ChartW1Coords bc = sample_chart(rng);
  PlanePoint x{chart_point_t<double>(bc.bc)};
  auto basis = tangent_space_basis(x);
  JordanElement<CD> y;
  for (const auto& tv : basis) y += CD(rng.normal()) * tv.y;
  double n = std::sqrt(norm_sq(y));
  double target = rng.uniform(0.5, 2.0);
  y = CD(target / n) * y;
  return {x, {y}};
}

}  // namespace cayley
