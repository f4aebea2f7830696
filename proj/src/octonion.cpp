#include "cayley/octonion.hpp"

namespace cayley::detail {

std::array<std::array<TableEntry, 8>, 8> build_octonion_table() {
  using C = Complex<Rational>;

  // Basis elements in the split picture.  e_0..e_3 are the quaternion units
  // under rho_H, e_{i+4} = e_i e_4.
  std::array<SplitPair<C>, 8> basis;
  std::array<Mat2<C>, 4> quat;
  const C i = C::i();
  quat[0] = Mat2<C>::identity();
  quat[1].m = {i, C(0), C(0), -i};          // rho_H(i)
  quat[2].m = {C(0), C(1), C(-1), C(0)};    // rho_H(j)
  quat[3].m = {C(0), i, i, C(0)};           // rho_H(k)
  for (int k = 0; k < 4; ++k) {
    basis[k] = {quat[k], Mat2<C>::zero()};
    basis[k + 4] = {Mat2<C>::zero(), quat[k]};
  }

  auto decompose = [&](const SplitPair<C>& p) -> TableEntry {
    Octonion<C> o = oct_from_split(p);
    TableEntry e{0, 0};
    int found = 0;
    for (int k = 0; k < 8; ++k) {
      const C& v = o.c[k];
      if (v == C(0)) continue;
      ++found;
      if (v == C(1))
        e = {1, static_cast<std::uint8_t>(k)};
      else if (v == C(-1))
        e = {-1, static_cast<std::uint8_t>(k)};
      else
        throw std::logic_error("octonion table entry is not a signed basis element");
    }
    if (found != 1) throw std::logic_error("octonion table entry is not a single basis element");
    return e;
  };

  std::array<std::array<TableEntry, 8>, 8> table;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = decompose(basis[a] * basis[b]);
  return table;
}

}  // namespace cayley::detail
