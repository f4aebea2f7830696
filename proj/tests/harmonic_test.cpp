#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/harmonic.hpp"
#include "cayley/rng.hpp"

using namespace cayley;
using namespace cayley::harmonic;

namespace {

Poly random_poly(Rng& rng, int degree, int nterms) {
  Poly p;
  for (int t = 0; t < nterms; ++t) {
    MonoKey k{};
    for (int d = 0; d < degree; ++d) k[rng.uniform_int(0, 26)] += 1;
    p.add_term(k, rng.rational());
  }
  return p;
}

Rational op_at_zero(const Poly& p, const Poly& q) {
  return apply_op(p, q).coefficient(MonoKey{});
}

}  // namespace

TEST_CASE("generators match the closed forms") {
  const auto& g = generators();
  auto a = symbolic_element();

  // T1, T2 closed forms
  Poly t1 = Poly::variable(24) + Poly::variable(25) + Poly::variable(26);
  CHECK(g.t1 == t1);

  Poly t2;
  for (int i = 0; i < 24; ++i) t2 += Rational(2) * (Poly::variable(i) * Poly::variable(i));
  for (int i = 24; i < 27; ++i) t2 += Poly::variable(i) * Poly::variable(i);
  CHECK(g.t2 == t2);

  // T3: Jordan-power route vs expanded closed formula, exact
  CHECK(g.t3 == t3_closed(a));

  // triple-derivative block of Gamma: 64 terms x_i y_j z_k, each +-6,
  // and the (0,0,0) coefficient is +6
  MonoKey k000{};
  k000[kVarX + 0] = 1;
  k000[kVarY + 0] = 1;
  k000[kVarZ + 0] = 1;
  CHECK(g.t3.coefficient(k000) == Rational(6));
  int triples = 0;
  for (const auto& [k, c] : g.t3.terms) {
    int zs = 0, ys = 0, xs = 0;
    for (int i = 0; i < 8; ++i) {
      zs += k[kVarZ + i];
      ys += k[kVarY + i];
      xs += k[kVarX + i];
    }
    if (zs == 1 && ys == 1 && xs == 1) {
      ++triples;
      CHECK((c == Rational(6) || c == Rational(-6)));
    }
  }
  CHECK(triples == 64);
}

TEST_CASE("operator identities on the generators") {
  const auto& g = generators();
  CHECK(apply_op(g.t1, g.t1) == Poly::constant(Rational(3)));
  CHECK(apply_op(g.t1, g.t2) == Rational(2) * g.t1);
  CHECK(apply_op(g.t1, g.t3) == Rational(3) * g.t2);
  CHECK(apply_op(g.t2, g.t2) == Poly::constant(Rational(198)));
  CHECK(apply_op(g.t2, g.t3) == Rational(198) * g.t1);

  // Gamma(T3) is a constant; the pairing route must give the same number.
  Poly gamma_t3 = apply_op(g.t3, g.t3);
  CHECK(gamma_t3.degree() == 0);
  Rational value = gamma_t3.coefficient(MonoKey{});
  CHECK(value == monomial_inner(g.t3, g.t3));
  // Term-by-term count: 3 cubic diagonal terms contribute 18, the 48 mixed
  // terms contribute 864, the 64 triple terms contribute 64 * 36.
  CHECK(value == Rational(18 + 864 + 64 * 36));

  CHECK(monomial_inner(g.t2, g.t1 * g.t1) == Rational(6));

  // T2 as a polynomial function at the identity element
  auto id_pt = oct_coords(JordanElement<Poly>::identity());
  std::array<Rational, 27> pt{};
  for (int i = 0; i < 27; ++i)
    pt[i] = id_pt[i].is_zero() ? Rational(0) : id_pt[i].coefficient(MonoKey{});
  CHECK(g.t2.evaluate<Rational>(pt) == Rational(3));
}

TEST_CASE("pairing duality and associativity") {
  MonoKey xi1cubed{};
  xi1cubed[24] = 3;
  Poly p = Poly::monomial(xi1cubed, Rational(1));
  CHECK(monomial_inner(p, p) == Rational(6));

  MonoKey zy{}, zx{};
  zy[kVarZ] = 1;
  zy[kVarY] = 1;
  zx[kVarZ] = 1;
  zx[kVarX] = 1;
  CHECK(monomial_inner(Poly::monomial(zy, Rational(1)), Poly::monomial(zx, Rational(1))) ==
        Rational(0));

  Rng rng(43);
  for (int n = 0; n < 200; ++n) {
    Poly a = random_poly(rng, rng.uniform_int(0, 3), 4);
    Poly b = random_poly(rng, rng.uniform_int(0, 3), 4);
    CHECK(monomial_inner(a, b) == op_at_zero(a, b));
  }
  for (int n = 0; n < 50; ++n) {
    Poly d1 = random_poly(rng, 1, 3);
    Poly d2 = random_poly(rng, 2, 3);
    Poly q = random_poly(rng, 3, 5);
    Rational lhs = op_at_zero(d1 * d2, q);
    CHECK(lhs == monomial_inner(d1 * d2, q));
    CHECK(lhs == op_at_zero(d1, apply_op(d2, q)));
  }
}

TEST_CASE("dimension formulas and Poincare series") {
  CHECK(dim_pk(1) == 27);
  CHECK(dim_pk(2) == 378);
  CHECK(dim_pk(3) == 3654);
  CHECK(dim_ik(6) == 7);
  CHECK(dim_hk(0) == 1);
  CHECK(dim_hk(1) == 26);
  CHECK(dim_hk(2) == 350);
  CHECK(dim_hk(3) == 3249);
  CHECK(dim_hk(3) + dim_hk(2) * 1 + dim_hk(1) * 2 + dim_hk(0) * 3 == dim_pk(3));

  auto s = poincare_series(20);
  CHECK(s.identity_holds);
  std::vector<long long> pi_expect = {1, 1, 2, 3, 4, 5, 7};
  for (int k = 0; k <= 6; ++k) CHECK(s.pi[k] == pi_expect[k]);
  CHECK(s.ph[0] == 1);
  CHECK(s.ph[1] == 26);
  CHECK(s.ph[2] == 350);
  CHECK(s.pp[2] == 378);

  // Independent series oracle: expand the generating products directly.
  const int N = 20;
  std::vector<BigInt> geo(N + 1, 1);  // 1/(1-t)
  auto conv = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(N + 1, 0);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<BigInt> geo2(N + 1, 0), geo3(N + 1, 0);
  for (int i = 0; i <= N; i += 2) geo2[i] = 1;
  for (int i = 0; i <= N; i += 3) geo3[i] = 1;
  auto pi_oracle = conv(conv(geo, geo2), geo3);
  std::vector<BigInt> inv24(N + 1, 0);
  inv24[0] = 1;
  for (int r = 0; r < 24; ++r) inv24 = conv(inv24, geo);
  std::vector<BigInt> numer(N + 1, 0);
  numer[0] = 1;
  numer[1] = 2;
  numer[2] = 2;
  numer[3] = 1;
  auto ph_oracle = conv(inv24, numer);
  auto pp_oracle = conv(conv(inv24, conv(geo, conv(geo, geo))), std::vector<BigInt>(N + 1, 0));
  for (int k = 0; k <= N; ++k) {
    CHECK(s.pi[k] == pi_oracle[k]);
    CHECK(s.ph[k] == ph_oracle[k]);
  }
  (void)pp_oracle;

  // dim H_k strictly increasing through k = 50
  for (int k = 0; k < 50; ++k) CHECK(dim_hk(k + 1) > dim_hk(k));
}

TEST_CASE("harmonic kernel dimensions for k = 0, 1, 2") {
  CHECK(harmonic_dim_exact(0) == 1);
  CHECK(harmonic_dim_exact(1) == 26);

  auto k2 = harmonic_kernel(2, 3, 3);
  CHECK(k2.dim == 350);
  CHECK(k2.dim == dim_hk(2));

  // sampled kernel elements are orthogonal to T1 P1 + T2 P0
  const auto& g = generators();
  Rng rng(47);
  for (const auto& h : k2.samples) {
    CHECK(apply_op(g.t1, h).is_zero());
    CHECK(apply_op(g.t2, h).is_zero());
    for (int n = 0; n < 10; ++n) {
      Poly m = random_poly(rng, 1, 2);
      CHECK(monomial_inner(h, g.t1 * m) == Rational(0));
    }
    CHECK(monomial_inner(h, g.t2) == Rational(0));
  }

  CHECK_THROWS(harmonic_kernel(4, 3));
}

TEST_CASE("invariant basis follows the inductive recipe") {
  const auto& g = generators();
  auto b2 = invariant_basis(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == g.t1 * g.t1);
  CHECK(b2[1] == g.t2 - Rational(1, 3) * (g.t1 * g.t1));
  CHECK(apply_op(g.t1, b2[1]).is_zero());

  auto b3 = invariant_basis(3);
  REQUIRE(b3.size() == 3);
  CHECK(b3[0] == g.t1 * (g.t1 * g.t1));
  CHECK(b3[1] == g.t1 * b2[1]);
  CHECK(b3[2] == g.t3 - g.t2 * g.t1 + Rational(2, 9) * (g.t1 * (g.t1 * g.t1)));
  CHECK(apply_op(g.t1, b3[2]).is_zero());

  // orthogonality within each basis
  for (std::size_t i = 0; i < b3.size(); ++i)
    for (std::size_t j = i + 1; j < b3.size(); ++j)
      CHECK(monomial_inner(b3[i], b3[j]) == Rational(0));

  // <<T1 f, T1 g>> = 3 <<f, g>> whenever L(g) = 0
  Rng rng(53);
  std::vector<Poly> lkernel = {b2[1], b3[2], b2[1] * b2[1], b2[1] * b3[2]};
  for (const auto& gk : lkernel) {
    for (int n = 0; n < 5; ++n) {
      Poly f = random_poly(rng, gk.degree(), 5);
      CHECK(monomial_inner(g.t1 * f, g.t1 * gk) == Rational(3) * monomial_inner(f, gk));
    }
  }
}

TEST_CASE("L is surjective from I_k onto I_{k-1} for k <= 4") {
  for (int k = 1; k <= 4; ++k) CHECK(l_surjective_on_invariants(k));
}
