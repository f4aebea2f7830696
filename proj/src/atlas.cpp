#include "cayley/atlas.hpp"

#include "cayley/harmonic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cayley::atlas {

namespace {

// Coordinate blocks in the split ordering a_0..a_26:
// 0..2 xi, 3..10 z|w, 11..18 y|v, 19..26 x|u.
constexpr int kBlockBase[3] = {3, 11, 19};

int block_of(int idx) {
  if (idx < 3) throw std::logic_error("block_of: diagonal coordinate");
  return (idx - 3) / 8;
}

/// Partner inside the same 2x2 matrix: 1<->4 and 2<->3 (zero-based 0<->3,
/// 1<->2), in both the Z and W halves.
int partner_of(int idx) {
  int block = block_of(idx);
  int local = (idx - 3) % 8;
  int half = local / 4;
  int pos = local % 4;
  return kBlockBase[block] + 4 * half + (3 - pos);
}

// Diagonal index bookkeeping per block: z sits at (1,2), y at (3,1),
// x at (2,3); "col" diagonal stays independent, "row" is solved from the
// trace, "opp" from the block's own off-diagonal equation.
constexpr int kXiCol[3] = {1, 0, 2};
constexpr int kXiRow[3] = {0, 2, 1};
constexpr int kXiOpp[3] = {2, 1, 0};

/// Symbolic octonion of a block: coefficients rebuilt from the 8 split
/// coordinate variables of that block.
Octonion<PolyC> symbolic_block(int base) {
  const CQ half(Rational(1, 2));
  const CQ mhalf_i(Rational(0), Rational(-1, 2));
  auto v = [&](int i) { return PolyC::variable(base + i); };
  Octonion<PolyC> o;
  o.c[0] = half * (v(0) + v(3));
  o.c[1] = mhalf_i * (v(0) - v(3));
  o.c[2] = half * (v(1) - v(2));
  o.c[3] = mhalf_i * (v(1) + v(2));
  o.c[4] = half * (v(4) + v(7));
  o.c[5] = mhalf_i * (v(4) - v(7));
  o.c[6] = half * (v(5) - v(6));
  o.c[7] = mhalf_i * (v(5) + v(6));
  return o;
}

JordanElement<PolyC> symbolic_point() {
  JordanElement<PolyC> a;
  a.xi = {PolyC::variable(0), PolyC::variable(1), PolyC::variable(2)};
  a.z = symbolic_block(kBlockBase[0]);
  a.y = symbolic_block(kBlockBase[1]);
  a.x = symbolic_block(kBlockBase[2]);
  return a;
}

struct Equations {
  std::vector<PolyC> defining;          // all nonzero components of A^2 = 0
  std::vector<PolyC> reduced_offdiag;   // yz - xi1 th(x), zx - xi2 th(y), xy - xi3 th(z)
  std::array<PolyC, 3> diagonal;        // xi_i^2 + norm forms
  PolyC trace;
};

const Equations& equations() {
  static const Equations eqs = [] {
    Equations e;
    auto a = symbolic_point();
    auto [sq, res] = matrix_square_residual(a);
    (void)sq;
    for (const auto& oct : res)
      for (int i = 0; i < 8; ++i)
        if (!oct.c[i].is_zero()) e.defining.push_back(oct.c[i]);

    // Diagonal equations in the residual list are res[0..2]; keep their
    // scalar parts separately for the solver.
    for (int d = 0; d < 3; ++d) e.diagonal[d] = res[d].c[0];

    // The solver scans the equations in split-matrix entries (the f_i shape
    // of the O_{z1} derivation), where each entry carries the pivot as a
    // bare coefficient.
    auto push_matrix_entries = [&](const Octonion<PolyC>& lhs) {
      const CQ i = CQ::i();
      auto zpart = [&](int c0, int c1) {
        e.reduced_offdiag.push_back(lhs.c[c0] + i * lhs.c[c1]);
        e.reduced_offdiag.push_back(lhs.c[c0] - i * lhs.c[c1]);
      };
      zpart(0, 1);  // Z11, Z22
      zpart(2, 3);  // Z12-like combinations
      zpart(4, 5);  // W11, W22
      zpart(6, 7);  // W12-like combinations
    };
    Octonion<PolyC> ex = oct_mul(a.y, a.z) - a.xi[0] * oct_theta(a.x);
    Octonion<PolyC> ey = oct_mul(a.z, a.x) - a.xi[1] * oct_theta(a.y);
    Octonion<PolyC> ez = oct_mul(a.x, a.y) - a.xi[2] * oct_theta(a.z);
    push_matrix_entries(ex);
    push_matrix_entries(ey);
    push_matrix_entries(ez);

    e.trace = PolyC::variable(0) + PolyC::variable(1) + PolyC::variable(2);
    return e;
  }();
  return eqs;
}

/// Coefficient polynomial of var in e, requiring var to appear linearly;
/// returns nullopt otherwise.
std::optional<PolyC> linear_coefficient(const PolyC& e, int var) {
  PolyC coeff;
  for (const auto& [k, c] : e.terms) {
    if (k[var] == 0) continue;
    if (k[var] > 1) return std::nullopt;
    MonoKey kk = k;
    kk[var] = 0;
    coeff.add_term(kk, c);
  }
  return coeff;
}

/// True when p is a single term c * a_pivot.
bool is_pivot_monomial(const PolyC& p, int pivot) {
  if (p.terms.size() != 1) return false;
  const auto& k = p.terms.begin()->first;
  if (k[pivot] != 1) return false;
  for (int i = 0; i < kNumVars; ++i)
    if (i != pivot && k[i] != 0) return false;
  return true;
}

ChartPlan build_plan(ChartId id) {
  const int pivot = id.pivot;
  const int block = block_of(pivot);
  const auto& eqs = equations();

  bool independent[kNumVars] = {};
  for (int i = 0; i < 8; ++i) independent[kBlockBase[block] + i] = true;
  independent[partner_of(pivot)] = false;
  independent[kXiCol[block]] = true;

  // Scan the reduced off-diagonal equations for variables whose full
  // coefficient is a single pivot term; those become dependent.
  std::vector<std::pair<PolyC, int>> pending;  // (equation, solved variable)
  bool dependent[kNumVars] = {};
  for (const auto& e : eqs.reduced_offdiag) {
    for (int v = 0; v < kNumVars; ++v) {
      if (independent[v] || v == pivot || dependent[v]) continue;
      if (v >= 3 && block_of(v) == block) continue;
      auto coeff = linear_coefficient(e, v);
      if (!coeff || coeff->is_zero()) continue;
      if (is_pivot_monomial(*coeff, pivot)) {
        pending.emplace_back(e, v);
        dependent[v] = true;
        break;
      }
    }
  }
  if (pending.size() != 9)
    throw std::logic_error("chart plan: expected 9 pivot-solved variables for " +
                           coord_name(pivot));

  pending.emplace_back(eqs.trace, kXiRow[block]);
  dependent[kXiRow[block]] = true;
  pending.emplace_back(eqs.diagonal[kXiCol[block]], partner_of(pivot));
  dependent[partner_of(pivot)] = true;

  ChartPlan plan;
  plan.id = id;
  int ni = 0, nd = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (dependent[i]) {
      plan.dependent[nd++] = i;
    } else {
      plan.independent[ni++] = i;
    }
  }
  if (ni != 16 || nd != 11) throw std::logic_error("chart plan: wrong split");

  // Order the steps so every equation only references known values.
  bool known[kNumVars] = {};
  for (int i : plan.independent) known[i] = true;
  std::vector<bool> placed(pending.size(), false);
  for (std::size_t round = 0; round < pending.size(); ++round) {
    bool advanced = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (placed[i]) continue;
      const auto& [e, var] = pending[i];
      bool ready = true;
      for (const auto& [k, c] : e.terms)
        for (int v = 0; v < kNumVars && ready; ++v)
          if (k[v] != 0 && v != var && !known[v]) ready = false;
      if (!ready) continue;
      auto coeff = linear_coefficient(e, var);
      PlanStep step;
      step.var = var;
      step.coeff = *coeff;
      PolyC cv;
      for (const auto& [k, c] : e.terms)
        if (k[var] != 0) cv.add_term(k, c);
      step.rest = e - cv;
      plan.steps.push_back(std::move(step));
      known[var] = true;
      placed[i] = true;
      advanced = true;
    }
    if (!advanced) break;
  }
  if (plan.steps.size() != 11) throw std::logic_error("chart plan: could not order the steps");
  return plan;
}

template <class T>
T eval_at(const PolyC& p, const std::array<T, 27>& vals) {
  return p.template evaluate<T>(vals);
}

double magnitude(const CQ& v) { return std::abs(to_double(v.re)) + std::abs(to_double(v.im)); }
double magnitude(const CD& v) { return std::abs(v.re) + std::abs(v.im); }
template <class F>
double magnitude(const Complex<Dual<F>>& v) {
  return std::abs(to_double(v.re.v)) + std::abs(to_double(v.im.v));
}

/// Determinant of an n x n matrix over a field, Gaussian elimination with
/// pivoting by float magnitude (any nonzero pivot is exact in rational
/// mode).
template <class T>
T det_n(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    double bm = magnitude(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r)
      if (magnitude(m[r][c]) > bm) {
        bm = magnitude(m[r][c]);
        best = r;
      }
    if (bm == 0.0) return T(0);
    if (best != c) {
      std::swap(m[best], m[c]);
      det = -det;
    }
    det *= m[c][c];
    T inv = T(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == T(0)) continue;
      T f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::mutex g_cache_mutex;

}  // namespace

std::string coord_name(int index) {
  static const char* letters[6] = {"z", "w", "y", "v", "x", "u"};
  if (index < 3) return "xi" + std::to_string(index + 1);
  int off = index - 3;
  return std::string(letters[off / 4]) + std::to_string(off % 4 + 1);
}

ChartId chart_by_name(const std::string& name) {
  for (int i = 3; i < 27; ++i)
    if (coord_name(i) == name) return {i};
  throw std::invalid_argument("unknown chart label: " + name);
}

std::vector<ChartId> all_charts() {
  std::vector<ChartId> out;
  for (int i = 3; i < 27; ++i) out.push_back({i});
  return out;
}

const ChartPlan& plan(ChartId id) {
  static std::map<int, ChartPlan> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = cache.find(id.pivot);
  if (it == cache.end()) it = cache.emplace(id.pivot, build_plan(id)).first;
  return it->second;
}

const std::vector<PolyC>& defining_equations() { return equations().defining; }

template <class T>
std::array<T, 27> solve_chart(ChartId id, const Coords16<T>& coords) {
  const ChartPlan& p = plan(id);
  std::array<T, 27> vals{};
  for (int i = 0; i < 16; ++i) vals[p.independent[i]] = coords[i];
  int pivot_slot = -1;
  for (int i = 0; i < 16; ++i)
    if (p.independent[i] == id.pivot) pivot_slot = i;
  if (magnitude(coords[pivot_slot]) == 0.0)
    throw std::domain_error("solve_chart: pivot coordinate " + coord_name(id.pivot) +
                            " must be nonzero");
  for (const auto& step : p.steps) {
    T c = eval_at(step.coeff, vals);
    T r = eval_at(step.rest, vals);
    vals[step.var] = -r / c;
  }
  return vals;
}

template <class T>
Coords16<T> project(ChartId id, const std::array<T, 27>& v) {
  const ChartPlan& p = plan(id);
  Coords16<T> out;
  for (int i = 0; i < 16; ++i) out[i] = v[p.independent[i]];
  return out;
}

template <class T>
Coords16<T> transition(ChartId from, ChartId to, const Coords16<T>& c) {
  std::array<T, 27> v = solve_chart(from, c);
  if (magnitude(v[to.pivot]) == 0.0)
    throw std::domain_error("transition: target pivot " + coord_name(to.pivot) +
                            " vanishes at this point");
  return project(to, v);
}

template std::array<CQ, 27> solve_chart<CQ>(ChartId, const Coords16<CQ>&);
template std::array<CD, 27> solve_chart<CD>(ChartId, const Coords16<CD>&);
template Coords16<CQ> project<CQ>(ChartId, const std::array<CQ, 27>&);
template Coords16<CD> project<CD>(ChartId, const std::array<CD, 27>&);
template Coords16<CQ> transition<CQ>(ChartId, ChartId, const Coords16<CQ>&);
template Coords16<CD> transition<CD>(ChartId, ChartId, const Coords16<CD>&);

namespace {

template <class F>
std::vector<std::vector<Complex<F>>> transition_jacobian(ChartId from, ChartId to,
                                                         const Coords16<Complex<F>>& c) {
  using DC = Complex<Dual<F>>;
  std::vector<std::vector<Complex<F>>> jac(16, std::vector<Complex<F>>(16));
  for (int dir = 0; dir < 16; ++dir) {
    Coords16<DC> seeded;
    for (int i = 0; i < 16; ++i) {
      seeded[i].re = Dual<F>(c[i].re, F(i == dir ? 1 : 0));
      seeded[i].im = Dual<F>(c[i].im, F(0));
    }
    Coords16<DC> out = transition(from, to, seeded);
    // Holomorphic maps: the derivative of out_r along the complex direction
    // e_dir is read off the dual parts.
    for (int r = 0; r < 16; ++r) jac[r][dir] = {out[r].re.d, out[r].im.d};
  }
  return jac;
}

}  // namespace

std::vector<std::vector<CQ>> jacobian_matrix(ChartId from, ChartId to,
                                              const Coords16<CQ>& c) {
  return transition_jacobian<Rational>(from, to, c);
}

CQ jacobian_det(ChartId from, ChartId to, const Coords16<CQ>& c) {
  return det_n(transition_jacobian<Rational>(from, to, c));
}

CD jacobian_det_d(ChartId from, ChartId to, const Coords16<CD>& c) {
  return det_n(transition_jacobian<double>(from, to, c));
}

std::array<CQ, 27> sample_exact(Rng& rng, ChartId id) {
  for (;;) {
    Coords16<CQ> coords;
    const ChartPlan& p = plan(id);
    for (int i = 0; i < 16; ++i) {
      coords[i] = rng.cq();
      if (p.independent[i] == id.pivot && coords[i] == CQ(0)) coords[i] = CQ(1);
    }
    auto v = solve_chart(id, coords);
    bool good = true;
    for (int i = 3; i < 27 && good; ++i)
      if (v[i] == CQ(0)) good = false;  // want all charts usable at the sample
    if (good) return v;
  }
}

Rational omega_sign(ChartId id) {
  static std::map<int, Rational> cache;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(id.pivot);
    if (it != cache.end()) return it->second;
  }
  ChartId z1 = chart_by_name("z1");
  Rational sign(1);
  if (id.pivot != z1.pivot) {
    Rng rng(20240915);
    auto v = sample_exact(rng, z1);
    auto c = project(z1, v);
    CQ jac = jacobian_det(z1, id, c);
    // s_p = pivot^5 / (z1^5 * J); must be exactly +-1.
    CQ num = v[id.pivot] * v[id.pivot];
    num *= num;
    num *= v[id.pivot];
    CQ den = v[z1.pivot] * v[z1.pivot];
    den *= den;
    den *= v[z1.pivot];
    CQ s = num / (den * jac);
    if (s == CQ(1))
      sign = 1;
    else if (s == CQ(-1))
      sign = -1;
    else
      throw std::logic_error("omega_sign: cocycle ratio is not +-1 for chart " +
                             coord_name(id.pivot));
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  cache.emplace(id.pivot, sign);
  return sign;
}

template <class T>
T cy_form_value(ChartId id, const Coords16<T>& coords, const std::array<Coords16<T>, 16>& frame) {
  const ChartPlan& p = plan(id);
  int pivot_slot = -1;
  for (int i = 0; i < 16; ++i)
    if (p.independent[i] == id.pivot) pivot_slot = i;
  T piv = coords[pivot_slot];
  T piv5 = piv * piv;
  piv5 = piv5 * piv5 * piv;
  std::vector<std::vector<T>> m(16, std::vector<T>(16));
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) m[i][j] = frame[j][i];
  T d = det_n(std::move(m));
  Rational s = omega_sign(id);
  T coeff = T(1) / piv5;
  if (s < 0) coeff = -coeff;
  return coeff * d;
}

template CQ cy_form_value<CQ>(ChartId, const Coords16<CQ>&, const std::array<Coords16<CQ>, 16>&);
template CD cy_form_value<CD>(ChartId, const Coords16<CD>&, const std::array<Coords16<CD>, 16>&);

ChartId best_chart(const Vec27<double>& v) {
  int best = 3;
  double bm = 0;
  for (int i = 3; i < 27; ++i) {
    double m = abs_c(v[i]);
    if (m > bm) {
      bm = m;
      best = i;
    }
  }
  return {best};
}

Rational residual_max(const std::array<CQ, 27>& v) {
  Rational worst(0);
  for (const auto& e : defining_equations()) {
    Rational r = abs_sq(e.evaluate<CQ>(v));
    if (r > worst) worst = r;
  }
  return worst;
}

double residual_max(const std::array<CD, 27>& v) {
  double worst = 0;
  for (const auto& e : defining_equations()) worst = std::max(worst, abs_c(e.evaluate<CD>(v)));
  return worst;
}

namespace {

/// Pfaffian of a skew-symmetric matrix by Parlett-Reid style elimination.
double pfaffian(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  if (n % 2) return 0.0;
  double pf = 1.0;
  for (int k = 0; k < n - 1; k += 2) {
    int best = k + 1;
    double bm = std::abs(a(k, k + 1));
    for (int r = k + 2; r < n; ++r)
      if (std::abs(a(k, r)) > bm) {
        bm = std::abs(a(k, r));
        best = r;
      }
    if (bm == 0.0) return 0.0;
    if (best != k + 1) {
      a.row(best).swap(a.row(k + 1));
      a.col(best).swap(a.col(k + 1));
      pf = -pf;
    }
    pf *= a(k, k + 1);
    for (int r = k + 2; r < n; ++r) {
      double f = a(k, r) / a(k, k + 1);
      a.row(r) -= f * a.row(k + 1);
      a.col(r) -= f * a.col(k + 1);
    }
  }
  return pf;
}

/// Pushforward of the 32 Darboux coordinate vectors through Psi, as columns
/// of complex 27-vectors, by central differences.
std::array<Vec27<double>, 32> psi_frame(const std::array<double, 32>& x, double h) {
  std::array<Vec27<double>, 32> cols;
  for (int j = 0; j < 32; ++j) {
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    Vec27<double> ap = to_vec27(darboux_psi(xp)), am = to_vec27(darboux_psi(xm));
    for (int k = 0; k < 27; ++k) cols[j][k] = CD(1.0 / (2.0 * h)) * (ap[k] - am[k]);
  }
  return cols;
}

/// Chart coordinates (b,c) of the base point of tau^{-1}(A), extended to a
/// neighborhood of X_O in the ambient space.
std::array<double, 16> base_coords_of(const Vec27<double>& av) {
  EmbeddedPoint e{from_vec27(av)};
  double nsq = norm_sq(e.a);
  double n = std::sqrt(nsq);
  JordanElement<CD> bar = jordan_conj(e.a);
  JordanElement<CD> x = CD(0.5 / n) * (e.a + bar) + CD(1.0 / nsq) * jordan_product(e.a, bar);
  std::array<double, 16> bc;
  for (int i = 0; i < 8; ++i) {
    bc[i] = x.y.c[i].re;
    bc[8 + i] = x.z.c[i].re;
  }
  return bc;
}

}  // namespace

TopFormRatio omega_liouville_ratio(const CotangentPoint& p) {
  auto x = darboux_coords(p);
  Vec27<double> av = to_vec27(darboux_psi(x));
  ChartId chart = best_chart(av);
  const ChartPlan& pl = plan(chart);

  double h = 1e-5 * std::max(1.0, std::sqrt(std::sqrt(norm_sq(p.y.y))));
  auto cols = psi_frame(x, h);

  Eigen::MatrixXcd m(32, 32);
  for (int i = 0; i < 16; ++i) {
    int idx = pl.independent[i];
    for (int j = 0; j < 32; ++j) {
      CD val = cols[j][idx];
      m(i, j) = std::complex<double>(val.re, val.im);
      m(16 + i, j) = std::complex<double>(val.re, -val.im);
    }
  }
  std::complex<double> det = m.determinant();
  double piv10 = std::pow(abs_sq(av[chart.pivot]), 5);
  std::complex<double> omega_sq = det / piv10;

  double liou = pfaffian(canonical_omega());
  TopFormRatio r;
  r.omega_sq_value = {omega_sq.real(), omega_sq.imag()};
  r.liouville = liou;
  r.ratio = std::abs(omega_sq) / std::abs(liou);
  return r;
}

PairingMeasurement riemann_pairing_constant(const CotangentPoint& p) {
  auto x = darboux_coords(p);
  Vec27<double> av = to_vec27(darboux_psi(x));
  ChartId chart = best_chart(av);
  const ChartPlan& pl = plan(chart);

  double scale = std::max(1.0, std::sqrt(std::sqrt(norm_sq(p.y.y))));
  double h = 1e-5 * scale;
  auto cols = psi_frame(x, h);

  // Rows 1..16: the pullback of the normalized base coframe sqrt(2) dm_i
  // along the frame columns, by ambient central differences of tau^{-1}.
  Eigen::MatrixXcd m(32, 32);
  double ha = 1e-6 * scale;
  for (int j = 0; j < 32; ++j) {
    Vec27<double> plus = av, minus = av;
    for (int k = 0; k < 27; ++k) {
      plus[k] += CD(ha) * cols[j][k];
      minus[k] -= CD(ha) * cols[j][k];
    }
    auto bp = base_coords_of(plus), bm = base_coords_of(minus);
    for (int i = 0; i < 16; ++i) {
      double d = std::sqrt(2.0) * (bp[i] - bm[i]) / (2.0 * ha);
      m(i, j) = std::complex<double>(d, 0.0);
    }
  }
  for (int i = 0; i < 16; ++i) {
    int idx = pl.independent[i];
    for (int j = 0; j < 32; ++j) {
      CD val = cols[j][idx];
      m(16 + i, j) = std::complex<double>(val.re, -val.im);
    }
  }

  // Volume density of the Riemann volume form in the normalized coframe.
  ChartW1Coords bc;
  auto bcv = base_coords_of(av);
  for (int i = 0; i < 16; ++i) bc.bc[i] = bcv[i];
  double density = metric_and_volume_frame(bc).volume_density;

  std::complex<double> det = m.determinant();
  CQ s(omega_sign(chart));
  CD piv = av[chart.pivot];
  CD piv5 = piv * piv;
  piv5 = piv5 * piv5 * piv;
  std::complex<double> coeff =
      std::complex<double>(to_double(s.re), 0.0) / std::conj(std::complex<double>(piv5.re, piv5.im));
  std::complex<double> value = density * coeff * det;

  double liou = std::abs(pfaffian(canonical_omega()));
  double na = std::sqrt(norm_sq(from_vec27(av)));
  PairingMeasurement out;
  out.raw_value = {value.real(), value.imag()};
  out.ratio_raw = std::abs(value) / liou;
  out.constant = out.ratio_raw / (na * na * na);
  return out;
}

int span_rank(const std::vector<Vec27<double>>& samples, double tol) {
  Eigen::MatrixXcd m(27, static_cast<int>(samples.size()));
  for (int j = 0; j < static_cast<int>(samples.size()); ++j)
    for (int i = 0; i < 27; ++i) m(i, j) = std::complex<double>(samples[j][i].re, samples[j][i].im);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

int trace_form_gradient_rank(const std::array<CD, 27>& oct_point, double tol) {
  const auto& g = harmonic::generators();
  Eigen::MatrixXcd m(3, 27);
  const harmonic::Poly* ts[3] = {&g.t1, &g.t2, &g.t3};
  for (int r = 0; r < 3; ++r)
    for (int v = 0; v < 27; ++v) {
      CD val = ts[r]->derivative(v).evaluate<CD>(oct_point);
      m(r, v) = std::complex<double>(val.re, val.im);
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  double cutoff = tol * std::max(sv(0), 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace cayley::atlas
