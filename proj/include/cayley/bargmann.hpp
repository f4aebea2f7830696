#pragma once

#include "cayley/harmonic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

/// Closed-form constants of the Bargmann-type transformation and the
/// epsilon-regime classification. Everything runs through log-Gamma, so the
/// evaluations stay finite far beyond k = 10^4.
namespace bargmann {

struct BargmannParams {
  int k = 0;
  double epsilon = 0.0;
};

enum class Regime {
  kIsomorphism,            // epsilon = -47/4
  kForwardBoundedOnly,     // epsilon > -47/4
  kInverseBoundedOnly,     // -22 < epsilon < -47/4
  kFiniteDimPatchRequired  // epsilon <= -22
};

std::string regime_name(Regime r);
Regime classify(double epsilon);

/// Volume placeholders; no closed form is published for them, and every
/// reported quantity either factors them out or carries them symbolically.
struct Volumes {
  double vol_s_bundle = 1.0;  // Vol(S(P^2 O))
  double vol_p2o = 1.0;       // Vol(P^2 O)
};

/// Vol(S^15) = 2 pi^8 / 7!, the one sphere volume the closed forms need.
double vol_s15();

double log_dim_hk(int k);

struct ConstantsRecord {
  int k;
  double epsilon;
  double log_bk;   ///< log b_k with Vol(S(P^2 O)) factored out (or included via Volumes)
  double log_ak;   ///< log a_k with Vol(S^15) Vol(P^2 O) factored out likewise
  double log_n2;   ///< log N(k)^2, volume-free
  Regime regime;
};

/// Throws when 4k + 44 + 2 eps <= 0 (Gamma pole side), naming the k.
ConstantsRecord constants(const BargmannParams& p, const Volumes& vol = {});

/// log N(k)^2 by the defining ratio and by the Gauss-multiplication product
/// form; the two agree to ~1e-12 in log space.
double log_n2_direct(int k, double epsilon);
double log_n2_product(int k, double epsilon);

/// Max |log ratio| between the two routes for k <= kMax.
double gauss_multiplication_check(int k_max, double epsilon);

struct AsymptoticReport {
  double last_ratio;       ///< N(kMax)/N(kMax-1)
  double growth;           ///< N(kMax)^2/N(kMax/5)^2
  bool ratio_near_one;     ///< |last_ratio - 1| < 1e-3
};
AsymptoticReport asymptotic_regime_probe(double epsilon, int k_max);

struct QuadratureResult {
  double value;
  double closed_form;
  double rel_error;
};

/// Adaptive Simpson quadrature of int_0^inf t^power e^{-rate t} dt against
/// Gamma(power+1)/rate^{power+1}.
QuadratureResult radial_quadrature(int power, double rate);

/// Smallest degree with a finite Fock norm: k > -11 - eps/2.
int fock_min_degree(double epsilon);

struct SpectralData {
  long long eigenvalue;  ///< k^2 + 11k
  int phase_exponent;    ///< 2 (11 + k)
};
SpectralData spectral_data(int k);

struct MajorantReport {
  double log_partial_sum;
  std::vector<double> term_ratios;  ///< term_{k+1}/term_k
  bool converges;                   ///< ratios eventually < 1 and -> 0
};
MajorantReport kernel_majorant(double norm_a, double norm_b, double epsilon, int terms);

struct McResult {
  double ratio;      ///< estimate / closed form
  double std_error;  ///< standard error of the ratio
  std::uint64_t samples;
};

/// Monte-Carlo estimate of the 16-dimensional fiber integral
/// (1/2)^k int (sum beta^2+gamma^2)^{k+3} e^{-sqrt2 pi r}, importance
/// sampled radially, against Gamma(2k+22)/(2^{2k+11} pi^{2k+22}) Vol(S^15).
McResult bargmann_diagonal_mc(int k, std::uint64_t samples, std::uint64_t seed);

}  // namespace bargmann
}  // namespace cayley
