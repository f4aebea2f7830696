#pragma once

#include "cayley/jordan.hpp"
#include "cayley/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace cayley {

/// Polynomial algebra on the Jordan algebra in the octonion-basis
/// coordinates (z_0..z_7, y_0..y_7, x_0..x_7, xi_1, xi_2, xi_3).
namespace harmonic {

using Poly = Polynomial<Rational>;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kVarZ = 0;
inline constexpr int kVarY = 8;
inline constexpr int kVarX = 16;
inline constexpr int kVarXi = 24;

/// The generic element of J(3) with each coordinate a polynomial variable.
JordanElement<Poly> symbolic_element();

/// The trace forms T1, T2, T3 as polynomials, generated through the
/// symbolic Jordan powers (hence through the octonion multiplication
/// table). L = D^{T1}, Delta = D^{T2}, Gamma = D^{T3} via apply_op.
struct Generators {
  Poly t1, t2, t3;
};
const Generators& generators();

/// All monomial exponent keys of total degree k, in lexicographic order.
std::vector<MonoKey> monomials_of_degree(int k);

BigInt binomial(int n, int k);

/// dim P_k = C(27+k-1, k).
BigInt dim_pk(int k);
/// dim I_k = number of solutions of i1 + 2 i2 + 3 i3 = k.
BigInt dim_ik(int k);
/// dim H_k = C(24+k-1,k) + 2 C(24+k-2,k-1) + 2 C(24+k-3,k-2) + C(24+k-4,k-3).
BigInt dim_hk(int k);

/// Coefficient lists of the three Poincare series up to maxOrder inclusive.
struct PoincareSeries {
  std::vector<BigInt> pp, pi, ph;
  bool identity_holds;  ///< PP = PH * PI coefficientwise through maxOrder
};
PoincareSeries poincare_series(int max_order);

/// Dimension of the joint kernel of L, Delta, Gamma on degree-k homogeneous
/// polynomials, by exact fraction-free elimination. Throws if k exceeds the
/// cap.
struct HarmonicKernel {
  int dim;
  /// A few exact kernel elements (empty when the caller asks for none).
  std::vector<Poly> samples;
};
HarmonicKernel harmonic_kernel(int k, int cap = 3, int num_samples = 0);

inline int harmonic_dim_exact(int k, int cap = 3) { return harmonic_kernel(k, cap).dim; }

/// Monomial basis of I_k: the products T1^i1 T2^i2 T3^i3, i1+2i2+3i3 = k,
/// ordered with the pure-T1 power first.
std::vector<Poly> invariant_products(int k);

/// The inductively orthogonalized basis phi_k(i) of I_k: first T1 times the
/// previous basis, then new vectors orthogonal to all earlier ones (which
/// then satisfy L(phi) = 0).
std::vector<Poly> invariant_basis(int k);

/// Exact rank of a set of polynomials (viewed as vectors in monomial
/// coordinates).
int poly_rank(const std::vector<Poly>& ps);

/// Checks that L maps I_k onto I_{k-1}.
bool l_surjective_on_invariants(int k);

}  // namespace harmonic
}  // namespace cayley
