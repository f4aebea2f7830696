#include "cayley/harmonic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace cayley::harmonic {

JordanElement<Poly> symbolic_element() {
  JordanElement<Poly> a;
  for (int i = 0; i < 8; ++i) {
    a.z.c[i] = Poly::variable(kVarZ + i);
    a.y.c[i] = Poly::variable(kVarY + i);
    a.x.c[i] = Poly::variable(kVarX + i);
  }
  for (int i = 0; i < 3; ++i) a.xi[i] = Poly::variable(kVarXi + i);
  return a;
}

const Generators& generators() {
  static const Generators g = [] {
    auto a = symbolic_element();
    auto [t1, t2, t3] = trace_forms(a);
    return Generators{t1, t2, t3};
  }();
  return g;
}

namespace {

void enumerate_rec(int var, int remaining, MonoKey& key, std::vector<MonoKey>& out) {
  if (var == kNumVars - 1) {
    key[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(key);
    key[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    key[var] = static_cast<std::uint8_t>(e);
    enumerate_rec(var + 1, remaining - e, key, out);
  }
  key[var] = 0;
}

}  // namespace

std::vector<MonoKey> monomials_of_degree(int k) {
  std::vector<MonoKey> out;
  MonoKey key{};
  enumerate_rec(0, k, key, out);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt dim_pk(int k) { return binomial(26 + k, k); }

BigInt dim_ik(int k) {
  BigInt n = 0;
  for (int i3 = 0; 3 * i3 <= k; ++i3)
    for (int i2 = 0; 3 * i3 + 2 * i2 <= k; ++i2) ++n;
  return n;
}

BigInt dim_hk(int k) {
  return binomial(24 + k - 1, k) + 2 * binomial(24 + k - 2, k - 1) +
         2 * binomial(24 + k - 3, k - 2) + binomial(24 + k - 4, k - 3);
}

PoincareSeries poincare_series(int max_order) {
  if (max_order < 1) throw std::invalid_argument("poincare_series: maxOrder must be >= 1");
  PoincareSeries s;
  int n = max_order + 1;
  s.pp.resize(n);
  s.pi.resize(n);
  s.ph.resize(n);
  for (int k = 0; k < n; ++k) {
    s.pp[k] = dim_pk(k);
    s.pi[k] = dim_ik(k);
    s.ph[k] = dim_hk(k);
  }
  s.identity_holds = true;
  for (int k = 0; k < n; ++k) {
    BigInt conv = 0;
    for (int j = 0; j <= k; ++j) conv += s.ph[j] * s.pi[k - j];
    if (conv != s.pp[k]) s.identity_holds = false;
  }
  return s;
}

namespace {

/// Sparse integer row: sorted (column, value) pairs, gcd-normalized.
struct Row {
  std::vector<std::pair<int, BigInt>> e;

  void normalize() {
    if (e.empty()) return;
    BigInt g = 0;
    for (const auto& [c, v] : e) g = boost::multiprecision::gcd(g, v);
    if (e.front().second < 0) g = -g;
    if (g != 1)
      for (auto& [c, v] : e) v /= g;
  }
};

/// r <- lead(p) * r - lead(r) * p; r's lead column is eliminated.
Row combine(const Row& r, const Row& p) {
  const BigInt a = p.e.front().second;
  const BigInt b = r.e.front().second;
  Row out;
  out.e.reserve(r.e.size() + p.e.size());
  std::size_t i = 0, j = 0;
  while (i < r.e.size() && j < p.e.size()) {
    if (r.e[i].first == p.e[j].first) {
      BigInt v = a * r.e[i].second - b * p.e[j].second;
      if (v != 0) out.e.emplace_back(r.e[i].first, std::move(v));
      ++i;
      ++j;
    } else if (r.e[i].first < p.e[j].first) {
      out.e.emplace_back(r.e[i].first, a * r.e[i].second);
      ++i;
    } else {
      out.e.emplace_back(p.e[j].first, -b * p.e[j].second);
      ++j;
    }
  }
  for (; i < r.e.size(); ++i) out.e.emplace_back(r.e[i].first, a * r.e[i].second);
  for (; j < p.e.size(); ++j) out.e.emplace_back(p.e[j].first, -b * p.e[j].second);
  out.normalize();
  return out;
}

/// Fraction-free row echelon form. Returns pivot rows keyed by lead column.
std::map<int, Row> echelon(std::vector<Row> rows) {
  std::map<int, Row> pivots;
  for (auto& row : rows) {
    row.normalize();
    while (!row.e.empty()) {
      auto it = pivots.find(row.e.front().first);
      if (it == pivots.end()) break;
      row = combine(row, it->second);
    }
    if (!row.e.empty()) pivots.emplace(row.e.front().first, std::move(row));
  }
  return pivots;
}

/// Kernel vector for a chosen free column: entries over all columns.
std::vector<Rational> back_substitute(const std::map<int, Row>& pivots, int ncols, int free_col) {
  std::vector<Rational> x(ncols, Rational(0));
  x[free_col] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const Row& row = it->second;
    Rational s(0);
    for (std::size_t j = 1; j < row.e.size(); ++j)
      s += Rational(row.e[j].second) * x[row.e[j].first];
    x[it->first] = -s / Rational(row.e.front().second);
  }
  return x;
}

}  // namespace

int poly_rank(const std::vector<Poly>& ps) {
  // Assign a column per monomial present.
  std::map<MonoKey, int> col;
  for (const auto& p : ps)
    for (const auto& [k, c] : p.terms) col.emplace(k, 0);
  int n = 0;
  for (auto& [k, c] : col) c = n++;

  std::vector<Row> rows;
  rows.reserve(ps.size());
  for (const auto& p : ps) {
    // Clear denominators per row.
    Rational lcm(1);
    for (const auto& [k, c] : p.terms) {
      BigInt d = boost::multiprecision::denominator(c);
      BigInt nl = boost::multiprecision::numerator(lcm) * d /
                  boost::multiprecision::gcd(boost::multiprecision::numerator(lcm), d);
      lcm = Rational(nl);
    }
    Row r;
    for (const auto& [k, c] : p.terms) {
      Rational v = c * lcm;
      r.e.emplace_back(col[k], boost::multiprecision::numerator(v));
    }
    std::sort(r.e.begin(), r.e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(r));
  }
  return static_cast<int>(echelon(std::move(rows)).size());
}

HarmonicKernel harmonic_kernel(int k, int cap, int num_samples) {
  if (k < 0) throw std::invalid_argument("harmonic_kernel: k must be >= 0");
  if (k > cap)
    throw std::invalid_argument(
        "harmonic_kernel: degree exceeds the cap; raise the cap explicitly if the run time "
        "(exact elimination on dim P_k columns) is acceptable");

  auto sources = monomials_of_degree(k);
  const int ns = static_cast<int>(sources.size());
  std::map<MonoKey, int> source_index;
  for (int s = 0; s < ns; ++s) source_index.emplace(sources[s], s);

  const auto& g = generators();
  const Poly ops[3] = {g.t1, g.t2, g.t3};

  // Matrix rows are target monomials (across the three operator images),
  // columns are source monomials.
  std::map<std::pair<int, MonoKey>, std::map<int, Rational>> rows_acc;
  for (int s = 0; s < ns; ++s) {
    Poly mono = Poly::monomial(sources[s], Rational(1));
    for (int o = 0; o < 3; ++o) {
      Poly img = apply_op(ops[o], mono);
      for (const auto& [t, c] : img.terms) rows_acc[{o, t}][s] += c;
    }
  }

  std::vector<Row> rows;
  rows.reserve(rows_acc.size());
  for (const auto& [key, entries] : rows_acc) {
    Row r;
    for (const auto& [s, v] : entries) {
      if (v == 0) continue;
      // Operator images of integer monomials have integer coefficients.
      r.e.emplace_back(s, boost::multiprecision::numerator(v));
    }
    if (!r.e.empty()) rows.push_back(std::move(r));
  }

  auto pivots = echelon(std::move(rows));
  HarmonicKernel result;
  result.dim = ns - static_cast<int>(pivots.size());

  if (num_samples > 0) {
    int taken = 0;
    for (int c = 0; c < ns && taken < num_samples; ++c) {
      if (pivots.count(c)) continue;
      auto x = back_substitute(pivots, ns, c);
      Poly p;
      for (int s = 0; s < ns; ++s)
        if (x[s] != 0) p.add_term(sources[s], x[s]);
      result.samples.push_back(std::move(p));
      ++taken;
    }
  }
  return result;
}

std::vector<Poly> invariant_products(int k) {
  const auto& g = generators();
  std::vector<Poly> out;
  // Pure T1 power first, then increasing use of T2, T3.
  for (int i3 = 0; 3 * i3 <= k; ++i3)
    for (int i2 = 0; 3 * i3 + 2 * i2 <= k; ++i2) {
      int i1 = k - 2 * i2 - 3 * i3;
      Poly p = Poly::constant(Rational(1));
      for (int n = 0; n < i1; ++n) p = p * g.t1;
      for (int n = 0; n < i2; ++n) p = p * g.t2;
      for (int n = 0; n < i3; ++n) p = p * g.t3;
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<Poly> invariant_basis(int k) {
  const auto& g = generators();
  if (k < 1) throw std::invalid_argument("invariant_basis: k must be >= 1");
  if (k == 1) return {g.t1};

  std::vector<Poly> prev = invariant_basis(k - 1);
  std::vector<Poly> basis;
  basis.reserve(static_cast<std::size_t>(dim_ik(k).convert_to<long long>()));
  for (const auto& p : prev) basis.push_back(g.t1 * p);

  // Completion candidates without a T1 factor: T2^a T3^b with 2a+3b = k.
  for (int b = 0; 3 * b <= k; ++b) {
    if ((k - 3 * b) % 2 != 0) continue;
    int a = (k - 3 * b) / 2;
    Poly cand = Poly::constant(Rational(1));
    for (int n = 0; n < a; ++n) cand = cand * g.t2;
    for (int n = 0; n < b; ++n) cand = cand * g.t3;
    for (const auto& q : basis) {
      Rational num = monomial_inner(cand, q);
      if (num == 0) continue;
      cand -= (num / monomial_inner(q, q)) * q;
    }
    basis.push_back(std::move(cand));
  }
  return basis;
}

bool l_surjective_on_invariants(int k) {
  const auto& g = generators();
  auto basis = invariant_products(k);
  std::vector<Poly> images;
  images.reserve(basis.size());
  for (const auto& p : basis) images.push_back(apply_op(g.t1, p));
  return poly_rank(images) == dim_ik(k - 1);
}

}  // namespace cayley::harmonic
