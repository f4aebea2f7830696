#pragma once

#include "cayley/jordan.hpp"
#include "cayley/scalar.hpp"

#include <cstdint>
#include <random>

namespace cayley {

/// Deterministic random source. All distributions are implemented here so
/// reports are bit-identical for a fixed seed across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via the polar method.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  /// Gamma(shape, 1) for shape >= 1, Marsaglia-Tsang.
  double gamma(double shape) {
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small random rational; denominators weighted toward 1 to keep exact
  /// arithmetic fast through long product chains.
  Rational rational() {
    static constexpr int dens[4] = {1, 1, 2, 3};
    return Rational(uniform_int(-6, 6), dens[uniform_int(0, 3)]);
  }

  Rational rational_nonzero() {
    for (;;) {
      Rational q = rational();
      if (q != 0) return q;
    }
  }

  CQ cq() { return {rational(), rational()}; }

  Octonion<CQ> oct_rational(bool real_only = true) {
    Octonion<CQ> o;
    for (int i = 0; i < 8; ++i) o.c[i] = real_only ? CQ(rational()) : cq();
    return o;
  }

  Octonion<CD> oct_gauss(bool real_only = true) {
    Octonion<CD> o;
    for (int i = 0; i < 8; ++i) o.c[i] = real_only ? CD(normal()) : CD(normal(), normal());
    return o;
  }

  JordanElement<CQ> jordan_rational(bool real_only = true) {
    JordanElement<CQ> a;
    for (int i = 0; i < 3; ++i) a.xi[i] = real_only ? CQ(rational()) : cq();
    a.z = oct_rational(real_only);
    a.y = oct_rational(real_only);
    a.x = oct_rational(real_only);
    return a;
  }

  /// Derives an independent per-shard seed from this generator's seed.
  static std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard) {
    std::uint64_t x = root ^ (0x9e3779b97f4a7c15ULL * (shard + 1));
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cayley
