#include "cayley/bargmann.hpp"

#include "cayley/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace cayley::bargmann {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
const double kLnPi = std::log(M_PI);

double check_gamma_arg(int k, double epsilon) {
  double arg = 4.0 * k + 44.0 + 2.0 * epsilon;
  if (arg <= 0.0)
    throw std::domain_error("bargmann: Gamma argument 4k+44+2eps is not positive at k = " +
                            std::to_string(k));
  return arg;
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kIsomorphism:
      return "isomorphism";
    case Regime::kForwardBoundedOnly:
      return "forward-bounded-only";
    case Regime::kInverseBoundedOnly:
      return "inverse-bounded-only";
    case Regime::kFiniteDimPatchRequired:
      return "finite-dim-patch-required";
  }
  return "?";
}

Regime classify(double epsilon) {
  const double threshold = -47.0 / 4.0;
  if (epsilon <= -22.0) return Regime::kFiniteDimPatchRequired;
  if (epsilon == threshold) return Regime::kIsomorphism;
  if (epsilon > threshold) return Regime::kForwardBoundedOnly;
  return Regime::kInverseBoundedOnly;
}

double vol_s15() { return 2.0 * std::pow(M_PI, 8) / 5040.0; }

double log_dim_hk(int k) {
  return std::log(harmonic::dim_hk(k).convert_to<double>());
}

double log_n2_direct(int k, double epsilon) {
  double arg = 4.0 * k + 44.0 + 2.0 * epsilon;
  return -4.0 * k * kLn2 + log_dim_hk(k) + std::lgamma(arg) - 2.0 * std::lgamma(2.0 * k + 22.0);
}

double log_n2_product(int k, double epsilon) {
  double s = (44.0 + 4.0 * epsilon) * kLn2 - 0.5 * std::log(2.0 * M_PI) + log_dim_hk(k);
  for (int j = 0; j < 4; ++j) s += std::lgamma(k + 11.0 + epsilon / 2.0 + j / 4.0);
  s -= 2.0 * std::lgamma(k + 11.0);
  s -= 2.0 * std::lgamma(k + 11.5);
  return s;
}

ConstantsRecord constants(const BargmannParams& p, const Volumes& vol) {
  double arg = check_gamma_arg(p.k, p.epsilon);
  ConstantsRecord r;
  r.k = p.k;
  r.epsilon = p.epsilon;
  r.log_bk = -(40.0 + 3.0 * p.epsilon) * kLn2 - (44.0 + 2.0 * p.epsilon) * kLnPi +
             std::lgamma(arg) - 8.0 * p.k * kLn2 - 4.0 * p.k * kLnPi - log_dim_hk(p.k) +
             std::log(vol.vol_s_bundle);
  r.log_ak = -5.0 * kLn2 - 22.0 * kLnPi + std::lgamma(2.0 * p.k + 22.0) - 2.0 * p.k * kLn2 -
             2.0 * p.k * kLnPi - log_dim_hk(p.k) + std::log(vol_s15() * vol.vol_p2o);
  r.log_n2 = log_n2_direct(p.k, p.epsilon);
  r.regime = classify(p.epsilon);
  return r;
}

double gauss_multiplication_check(int k_max, double epsilon) {
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    check_gamma_arg(k, epsilon);
    worst = std::max(worst, std::abs(log_n2_direct(k, epsilon) - log_n2_product(k, epsilon)));
  }
  return worst;
}

AsymptoticReport asymptotic_regime_probe(double epsilon, int k_max) {
  if (k_max < 50) throw std::invalid_argument("asymptotic_regime_probe: kMax must be >= 50");
  AsymptoticReport rep;
  rep.last_ratio = std::exp(0.5 * (log_n2_direct(k_max, epsilon) - log_n2_direct(k_max - 1, epsilon)));
  rep.growth = std::exp(log_n2_direct(k_max, epsilon) - log_n2_direct(k_max / 5, epsilon));
  rep.ratio_near_one = std::abs(rep.last_ratio - 1.0) < 1e-3;
  return rep;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

QuadratureResult radial_quadrature(int power, double rate) {
  if (power < 0 || rate <= 0.0)
    throw std::invalid_argument("radial_quadrature: need power >= 0 and rate > 0");
  const double p = power;
  const double log_norm = (p + 1.0) * std::log(rate) - std::lgamma(p + 1.0);
  auto density = [&](double t) {
    if (t <= 0.0) return power == 0 ? rate : 0.0;
    return std::exp(log_norm + p * std::log(t) - rate * t);
  };
  // Seed the adaptive recursion with knots bracketing the Gamma peak, so
  // the first estimates never miss the mass.
  const double mean = (p + 1.0) / rate;
  const double sd = std::sqrt(p + 1.0) / rate;
  double upper = mean + 60.0 * sd + 60.0 / rate;
  std::vector<double> knots = {0.0};
  for (double c : {-10.0, -5.0, -2.0, 0.0, 2.0, 5.0, 10.0, 25.0})
    if (mean + c * sd > 0.0 && mean + c * sd < upper) knots.push_back(mean + c * sd);
  knots.push_back(upper);
  std::sort(knots.begin(), knots.end());
  double ratio = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    ratio += adaptive_simpson(density, knots[i], knots[i + 1], 1e-13);
  QuadratureResult qr;
  qr.closed_form = std::exp(std::lgamma(p + 1.0) - (p + 1.0) * std::log(rate));
  qr.value = ratio * qr.closed_form;
  qr.rel_error = std::abs(ratio - 1.0);
  if (!std::isfinite(ratio) || qr.rel_error > 1e-6)
    throw std::runtime_error("radial_quadrature: quadrature failed to converge");
  return qr;
}

int fock_min_degree(double epsilon) {
  int k = static_cast<int>(std::ceil(-11.0 - epsilon / 2.0 + 1e-12));
  if (4.0 * k + 44.0 + 2.0 * epsilon <= 0.0) ++k;  // strict inequality
  return std::max(0, k);
}

SpectralData spectral_data(int k) {
  return {static_cast<long long>(k) * k + 11LL * k, 2 * (11 + k)};
}

MajorantReport kernel_majorant(double norm_a, double norm_b, double epsilon, int terms) {
  if (44.0 + 2.0 * epsilon <= 0.0)
    throw std::domain_error("kernel_majorant: 44 + 2 eps must be positive");
  auto log_term = [&](int k) {
    return 8.0 * k * kLn2 + 4.0 * k * kLnPi + k * std::log(norm_a * norm_b) + log_dim_hk(k) -
           std::lgamma(4.0 * k + 44.0 + 2.0 * epsilon);
  };
  MajorantReport rep;
  // log-sum-exp over k = 0..terms
  std::vector<double> logs;
  for (int k = 0; k <= terms; ++k) logs.push_back(log_term(k));
  double mx = logs[0];
  for (double l : logs) mx = std::max(mx, l);
  double s = 0.0;
  for (double l : logs) s += std::exp(l - mx);
  rep.log_partial_sum = mx + std::log(s);

  int probe = std::max(terms, 200);
  bool tail_decreasing = true;
  for (int k = 0; k < probe; ++k) {
    double r = std::exp(log_term(k + 1) - log_term(k));
    if (k <= terms) rep.term_ratios.push_back(r);
    if (k >= probe / 2 && r >= 1.0) tail_decreasing = false;
  }
  double final_ratio = std::exp(log_term(probe + 1) - log_term(probe));
  rep.converges = tail_decreasing && final_ratio < 0.5;
  return rep;
}

McResult bargmann_diagonal_mc(int k, std::uint64_t samples, std::uint64_t seed) {
  if (k < 0 || k > 3) throw std::invalid_argument("bargmann_diagonal_mc: k must be in 0..3");
  if (samples < 100000)
    throw std::invalid_argument("bargmann_diagonal_mc: need at least 10^5 samples");

  const double rate = std::sqrt(2.0) * M_PI;
  const int mom = 2 * k + 6;

  // E[r^mom] under Gamma(16, rate) in units of the closed form:
  // closed moment = Gamma(16+mom)/(Gamma(16) rate^mom).
  const double log_closed_moment = std::lgamma(16.0 + mom) - std::lgamma(16.0) -
                                   mom * std::log(rate);

  const std::uint64_t shards = 64;
  const std::uint64_t per_shard = samples / shards;
  double sum = 0.0, sum_sq = 0.0;
  std::uint64_t n = 0;
  for (std::uint64_t s = 0; s < shards; ++s) {
    Rng rng(Rng::shard_seed(seed, s));
    double shard_sum = 0.0, shard_sq = 0.0;
    for (std::uint64_t i = 0; i < per_shard; ++i) {
      double r = rng.gamma(16.0) / rate;
      double w = std::exp(mom * std::log(r) - log_closed_moment);
      shard_sum += w;
      shard_sq += w * w;
    }
    sum += shard_sum;
    sum_sq += shard_sq;
    n += per_shard;
  }
  double mean = sum / static_cast<double>(n);
  double var = sum_sq / static_cast<double>(n) - mean * mean;
  McResult res;
  res.ratio = mean;
  res.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  res.samples = n;
  if (!std::isfinite(res.ratio) || res.std_error > 0.5 * std::abs(res.ratio))
    throw std::runtime_error("bargmann_diagonal_mc: estimator variance blew up");
  return res;
}

}  // namespace cayley::bargmann
