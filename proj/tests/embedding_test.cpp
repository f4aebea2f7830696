#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/embedding.hpp"

using namespace cayley;

namespace {

PlanePoint x1_point() { return chart_point(ChartW1Coords{}); }

JordanElement<CD> y1_element() {
  JordanElement<CD> y;
  y.z = Octonion<CD>::scalar(CD(1.0 / std::sqrt(2.0)));
  return y;
}

/// sqrt(2) Y1, built with exact unit entries.
JordanElement<CD> y1_sqrt2() {
  JordanElement<CD> y;
  y.z = Octonion<CD>::scalar(CD(1.0));
  return y;
}

JordanElement<CD> a1_element() {
  JordanElement<CD> a;
  a.xi = {CD(1.0), CD(-1.0), CD(0.0)};
  a.z = Octonion<CD>::scalar(CD(0.0, 1.0));
  return a;
}

double dist(const JordanElement<CD>& a, const JordanElement<CD>& b) {
  return std::sqrt(norm_sq(a - b));
}

}  // namespace

TEST_CASE("chart point basics") {
  PlanePoint x1 = x1_point();
  CHECK(dist(x1.a, JordanElement<CD>::diag(CD(1), CD(0), CD(0))) == 0.0);

  // b = 0, c = e0/4: t1 = 1/2 + sqrt(3)/4, a = 0
  ChartW1Coords c;
  c.bc[8] = 0.25;
  PlanePoint p = chart_point(c);
  CHECK(p.a.xi[0].re == doctest::Approx(0.5 + std::sqrt(3.0) / 4.0).epsilon(1e-15));
  CHECK(std::sqrt(oct_herm_norm_sq(p.a.x)) == 0.0);
  CHECK(plane_point_residual(p) < 1e-14);

  // boundary |b|^2 + |c|^2 = 1/8 is rejected
  ChartW1Coords bad;
  bad.bc[0] = 0.25;
  bad.bc[8] = 0.25;
  CHECK_THROWS_AS(chart_point(bad), std::domain_error);

  Rng rng(61);
  for (int n = 0; n < 100; ++n) {
    ChartW1Coords cc = sample_chart(rng);
    PlanePoint q = chart_point(cc);
    CHECK(plane_point_residual(q) < 1e-12);
    CHECK(q.a.xi[0].re > 0.5);
    CHECK(q.a.xi[1].re < 0.5);
  }
}

TEST_CASE("tangent space basis") {
  PlanePoint x1 = x1_point();
  auto basis = tangent_space_basis(x1);
  CHECK(basis.size() == 16);
  for (const auto& tv : basis) {
    CHECK(abs_c(trace(tv.y)) < 1e-14);
    JordanElement<CD> r = jordan_product(x1.a, tv.y) - CD(0.5) * tv.y;
    CHECK(std::sqrt(norm_sq(r)) < 1e-12);
    // at X1 the kernel is spanned by the z and y slots
    CHECK(oct_herm_norm_sq(tv.y.x) < 1e-24);
    CHECK(abs_sq(tv.y.xi[0]) + abs_sq(tv.y.xi[1]) + abs_sq(tv.y.xi[2]) < 1e-24);
  }

  // Y1 lies in the span (least-squares through the Gram matrix)
  JordanElement<CD> y1 = y1_element();
  Eigen::Matrix<double, 16, 16> gram;
  Eigen::Matrix<double, 16, 1> rhs;
  for (int i = 0; i < 16; ++i) {
    rhs(i) = herm_inner(y1, basis[i].y).re;
    for (int j = 0; j < 16; ++j) gram(i, j) = herm_inner(basis[i].y, basis[j].y).re;
  }
  Eigen::Matrix<double, 16, 1> coef = gram.ldlt().solve(rhs);
  JordanElement<CD> proj;
  for (int i = 0; i < 16; ++i) proj += CD(coef(i)) * basis[i].y;
  CHECK(dist(proj, y1) < 1e-12);

  Rng rng(67);
  for (int n = 0; n < 10; ++n) {
    PlanePoint q = chart_point(sample_chart(rng));
    auto b = tangent_space_basis(q);
    CHECK(b.size() == 16);
    for (const auto& tv : b) {
      CHECK(abs_c(trace(tv.y)) < 1e-12);
      CHECK(std::sqrt(norm_sq(jordan_product(q.a, tv.y) - CD(0.5) * tv.y)) < 1e-12);
    }
  }
}

TEST_CASE("metric and volume frame") {
  MetricFrame mf = metric_and_volume_frame(ChartW1Coords{});
  CHECK((mf.g - Eigen::Matrix<double, 16, 16>::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(mf.volume_density == doctest::Approx(1.0).epsilon(1e-14));

  // g(Y1, Y1) = 1 at X1
  JordanElement<CD> y1 = y1_element();
  CHECK(trace_inner(y1, y1).re == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(71);
  for (int n = 0; n < 50; ++n) {
    MetricFrame m = metric_and_volume_frame(sample_chart(rng));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 16, 16>> es(m.g);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    CHECK(m.g.isApprox(m.g.transpose(), 1e-14));
  }
}

TEST_CASE("diagonal permutations are Jordan automorphisms") {
  Rng rng(73);
  for (int n = 0; n < 100; ++n) {
    auto a = rng.jordan_rational(false);
    auto b = rng.jordan_rational(false);
    for (int w = 1; w <= 3; ++w) {
      CHECK(sigma_permute(w, jordan_product(a, b)) ==
            jordan_product(sigma_permute(w, a), sigma_permute(w, b)));
      CHECK(trace_inner(sigma_permute(w, a), sigma_permute(w, b)) == trace_inner(a, b));
    }
  }
}

TEST_CASE("tau anchor identities") {
  PlanePoint x1 = x1_point();

  // tau(X1, sqrt(2) Y1) = A1, exactly in IEEE arithmetic
  EmbeddedPoint a = tau({x1, {y1_sqrt2()}});
  CHECK(a.a == a1_element());

  // tau(X1, Y1) = A1 / 2
  EmbeddedPoint h = tau({x1, {y1_element()}});
  CHECK(dist(h.a, CD(0.5) * a1_element()) < 1e-15);

  CHECK_THROWS_AS(tau({x1, {JordanElement<CD>{}}}), std::domain_error);
}

TEST_CASE("embedded residuals and norm identity on samples") {
  Rng rng(79);
  for (int n = 0; n < 300; ++n) {
    CotangentPoint p = sample_cotangent(rng);
    EmbeddedPoint e = tau(p);
    double na = std::sqrt(norm_sq(e.a));
    auto [sq, tr] = embedded_residual(e);
    CHECK(sq < 1e-10 * na * na);
    CHECK(tr < 1e-12 * na);
    // ||A|| = ||Y||^2
    CHECK(std::abs(na - norm_sq(p.y.y)) < 1e-10 * na);
    // real and imaginary parts have equal norms ||a||^2 = ||b||^2 = ||Y||^4/2
    JordanElement<CD> re = CD(0.5) * (e.a + jordan_conj(e.a));
    JordanElement<CD> im = CD(0.0, -0.5) * (e.a - jordan_conj(e.a));
    double y4 = norm_sq(p.y.y) * norm_sq(p.y.y);
    CHECK(norm_sq(re) == doctest::Approx(0.5 * y4).epsilon(1e-10));
    CHECK(norm_sq(im) == doctest::Approx(0.5 * y4).epsilon(1e-10));
  }
}

TEST_CASE("tau_inv inverts tau") {
  EmbeddedPoint a1{a1_element()};
  CotangentPoint p = tau_inv(a1);
  CHECK(dist(p.x.a, x1_point().a) < 1e-14);
  CHECK(dist(p.y.y, y1_sqrt2()) < 1e-14);

  Rng rng(83);
  for (int n = 0; n < 1000; ++n) {
    CotangentPoint q = sample_cotangent(rng);
    CotangentPoint r = tau_inv(tau(q));
    CHECK(dist(r.x.a, q.x.a) < 1e-9);
    CHECK(dist(r.y.y, q.y.y) < 1e-9);
  }

  CHECK_THROWS_AS(tau_inv(EmbeddedPoint{JordanElement<CD>{}}), std::domain_error);
  // A with A^2 != 0 is rejected
  CHECK_THROWS_AS(tau_inv(EmbeddedPoint{JordanElement<CD>::identity()}), std::domain_error);
}

TEST_CASE("tau is injective on separated samples") {
  Rng rng(89);
  std::vector<CotangentPoint> pts;
  std::vector<EmbeddedPoint> imgs;
  for (int n = 0; n < 40; ++n) {
    pts.push_back(sample_cotangent(rng));
    imgs.push_back(tau(pts.back()));
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double din = dist(pts[i].x.a, pts[j].x.a) + dist(pts[i].y.y, pts[j].y.y);
      if (din > 1e-3) CHECK(dist(imgs[i].a, imgs[j].a) > 1e-8 * din);
    }
}

TEST_CASE("dilation and flow") {
  EmbeddedPoint a1{a1_element()};

  // tau_inv(2 A1) = (X1, 2 Y1)
  CotangentPoint p = tau_inv(dilate(a1, 2.0));
  CHECK(dist(p.x.a, x1_point().a) < 1e-14);
  CHECK(dist(p.y.y, CD(2.0) * y1_element()) < 1e-14);

  // flow preserves the norm and constraints
  Rng rng(97);
  for (int n = 0; n < 50; ++n) {
    EmbeddedPoint e = tau(sample_cotangent(rng));
    double t = rng.uniform(-3.0, 3.0);
    EmbeddedPoint f = flow(e, t);
    CHECK(norm_sq(f.a) == doctest::Approx(norm_sq(e.a)).epsilon(1e-13));
    auto [sq, tr] = embedded_residual(f);
    CHECK(sq < 1e-9);
    CHECK(tr < 1e-12);
  }

  // degree-k coordinate monomials pick up the phase e^{2ikt}
  EmbeddedPoint e = tau(sample_cotangent(rng));
  double t = 0.37;
  EmbeddedPoint f = flow(e, t);
  CD z_e = to_vec27(e.a)[3], z_f = to_vec27(f.a)[3];
  CD expected = CD(std::cos(2 * t), std::sin(2 * t)) * z_e;
  CHECK(abs_c(z_f - expected) < 1e-13);

  CHECK_THROWS_AS(dilate(a1, -1.0), std::domain_error);
}

TEST_CASE("g0 weight") {
  EmbeddedPoint a1{a1_element()};
  CHECK(g0_weight(a1) == doctest::Approx(std::exp(-2.0 * M_PI)).epsilon(1e-14));

  Rng rng(101);
  for (int n = 0; n < 20; ++n) {
    CotangentPoint p = sample_cotangent(rng);
    double ny = std::sqrt(norm_sq(p.y.y));
    CHECK(g0_weight(tau(p)) ==
          doctest::Approx(std::exp(-std::sqrt(2.0) * M_PI * ny)).epsilon(1e-10));
  }
}

TEST_CASE("symplectic form matches the Kaehler pullback") {
  CotangentPoint p{x1_point(), {y1_element()}};
  auto x = darboux_coords(p);

  double res = symplectic_residual(x, 1e-4);
  CHECK(res < 1e-5);

  // O(step^2) convergence of the finite-difference form
  double r2 = symplectic_residual(x, 4e-4);
  CHECK(r2 / res > 2.0);

  // and at a couple of generic points
  Rng rng(103);
  for (int n = 0; n < 2; ++n) {
    CotangentPoint q = sample_cotangent(rng);
    CHECK(symplectic_residual(darboux_coords(q), 1e-4) < 1e-5);
  }
}

TEST_CASE("one-form identity") {
  CotangentPoint p{x1_point(), {y1_element()}};
  auto x = darboux_coords(p);
  Rng rng(107);
  for (int n = 0; n < 20; ++n) {
    std::array<double, 32> dir;
    double s = 0;
    for (auto& d : dir) {
      d = rng.normal();
      s += d * d;
    }
    for (auto& d : dir) d /= std::sqrt(s);
    CHECK(one_form_residual(x, dir) < 1e-6);
  }
}
