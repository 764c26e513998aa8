#include "git1/function_field.hpp"

#include <algorithm>
#include <set>

#include "git1/errors.hpp"

namespace git1 {

bool coordinate_realizable(const Curve& c) {
  if (c.core.kind == CoreKind::Smooth) return false;
  for (const Tail& t : c.tails) {
    if (t.anchor.kind != AnchorKind::SmoothPoint) return false;
    if (t.components.size() != 1) return false;
  }
  return true;
}

namespace {

int tail_of_mark(const Curve& c, int mark) {
  for (std::size_t t = 0; t < c.tails.size(); ++t)
    for (int j : c.tails[t].components[0])
      if (j == mark) return static_cast<int>(t);
  return -1;
}

int core_of_mark(const Curve& c, int mark) {
  for (std::size_t k = 0; k < c.core_marks.size(); ++k)
    for (int j : c.core_marks[k])
      if (j == mark) return static_cast<int>(k);
  return -1;
}

// Points on a core component that marks and anchors must avoid.
std::vector<Rational> reserved_core_points(CoreKind kind) {
  if (kind == CoreKind::Fold) return {Rational(0)};
  return {Rational(1), Rational(-1)};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  const int p = num(rng);
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

Rational random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (sgn(q)) return q;
  }
}

}  // namespace

void validate_coordinatized(const CoordinatizedCurve& cc) {
  const Curve& c = cc.base;
  if (!coordinate_realizable(c))
    throw Error(ErrorKind::Unsupported, "coordinates need a Fold or Ngon core with single-component tails at smooth points");
  if (cc.anchor_positions.size() != c.tails.size())
    throw Error(ErrorKind::Parse, "need one anchor position per tail");
  const int m = c.core.component_count();
  std::vector<std::vector<Rational>> taken(m + c.tails.size());
  for (int k = 0; k < m; ++k) taken[k] = reserved_core_points(c.core.kind);
  for (std::size_t t = 0; t < c.tails.size(); ++t) taken[m + t] = {Rational(0)};
  auto place = [&](std::size_t comp, const Rational& p, const std::string& what) {
    if (std::find(taken[comp].begin(), taken[comp].end(), p) != taken[comp].end())
      throw Error(ErrorKind::PositionClash, what + " at " + to_string(p) + " collides with another special point");
    taken[comp].push_back(p);
  };
  for (std::size_t t = 0; t < c.tails.size(); ++t)
    place(c.tails[t].anchor.component, cc.anchor_positions[t], "tail " + std::to_string(t) + " attachment");
  for (int j = 1; j <= c.n; ++j) {
    auto pos = cc.positions.find(j);
    auto sc = cc.scalings.find(j);
    if (pos == cc.positions.end()) throw Error(ErrorKind::Parse, "missing position for mark " + std::to_string(j));
    if (sc == cc.scalings.end()) throw Error(ErrorKind::Parse, "missing scaling for mark " + std::to_string(j));
    if (sgn(sc->second) == 0) throw Error(ErrorKind::ZeroScaling, "mark " + std::to_string(j));
    int k = core_of_mark(c, j);
    std::size_t comp = k >= 0 ? static_cast<std::size_t>(k) : m + tail_of_mark(c, j);
    place(comp, pos->second, "mark " + std::to_string(j));
  }
}

CoordinatizedCurve random_coordinatized(const Curve& c, std::mt19937_64& rng) {
  CoordinatizedCurve cc;
  cc.base = c;
  const int m = c.core.component_count();
  std::vector<std::vector<Rational>> taken(m + c.tails.size());
  for (int k = 0; k < m; ++k) taken[k] = reserved_core_points(c.core.kind);
  for (std::size_t t = 0; t < c.tails.size(); ++t) taken[m + t] = {Rational(0)};
  auto fresh = [&](std::size_t comp) {
    for (;;) {
      Rational q = random_rational(rng);
      if (std::find(taken[comp].begin(), taken[comp].end(), q) == taken[comp].end()) {
        taken[comp].push_back(q);
        return q;
      }
    }
  };
  for (const Tail& t : c.tails) cc.anchor_positions.push_back(fresh(t.anchor.component));
  for (int j = 1; j <= c.n; ++j) {
    int k = core_of_mark(c, j);
    cc.positions[j] = fresh(k >= 0 ? static_cast<std::size_t>(k) : m + tail_of_mark(c, j));
    cc.scalings[j] = random_nonzero(rng);
  }
  return cc;
}

Curve standard_core_curve(CoreKind kind, int m, int n, int tail_marks) {
  if (kind == CoreKind::Smooth) throw Error(ErrorKind::Unsupported, "smooth cores have no coordinate model");
  if (m < 1 || tail_marks < 0 || n - tail_marks < m)
    throw Error(ErrorKind::Parse, "need at least one core mark per component");
  Curve c;
  c.n = n;
  c.core = {kind, m};
  c.core_marks.resize(m);
  for (int j = 1; j <= n - tail_marks; ++j) c.core_marks[(j - 1) % m].push_back(j);
  if (tail_marks > 0) {
    Tail t;
    t.anchor = {AnchorKind::SmoothPoint, 0};
    t.components.emplace_back();
    for (int j = n - tail_marks + 1; j <= n; ++j) t.components[0].push_back(j);
    t.joints.push_back({kAnchorBase, {0}});
    c.tails.push_back(t);
  }
  return validate_curve(c);
}

Params<Rational> numeric_params(const CoordinatizedCurve& cc) {
  validate_coordinatized(cc);
  Params<Rational> p;
  p.base = validate_curve(cc.base);
  p.position.assign(p.base.n + 1, Rational(0));
  p.scaling.assign(p.base.n + 1, Rational(0));
  for (int j = 1; j <= p.base.n; ++j) {
    p.position[j] = cc.positions.at(j);
    p.scaling[j] = cc.scalings.at(j);
  }
  p.anchor = cc.anchor_positions;
  return p;
}

Params<Sym> symbolic_params(const Curve& base) {
  Params<Sym> p;
  p.base = validate_curve(base);
  if (!coordinate_realizable(p.base)) throw Error(ErrorKind::Unsupported, "curve has no coordinate model");
  const int n = p.base.n;
  p.position.assign(n + 1, Sym(0));
  p.scaling.assign(n + 1, Sym(0));
  for (int j = 1; j <= n; ++j) {
    p.position[j] = Sym::variable(j - 1);
    p.scaling[j] = Sym::variable(n + j - 1);
  }
  for (std::size_t t = 0; t < p.base.tails.size(); ++t) p.anchor.push_back(Sym::variable(2 * n + static_cast<int>(t)));
  return p;
}

namespace {

template <class K>
RF<K> lin_frac(const K& a, const K& b, const K& c, const K& d) {  // (a w + b) / (c w + d)
  return RF<K>(UPoly<K>(std::vector<K>{b, a}), UPoly<K>(std::vector<K>{d, c}));
}

// Coordinate with a simple pole at mark j normalized by its scaling.
template <class K>
RF<K> mark_coordinate(CoreKind kind, const K& mu, const K& x) {
  if (kind == CoreKind::Fold) return lin_frac<K>(x * mu, K(0), K(-1), mu);  // x w mu / (mu - w)
  return lin_frac<K>(-x * mu, x, K(1), -mu);                              // x (1 - mu w) / (w - mu)
}

template <class K>
std::vector<K> solve_linear(std::vector<std::vector<K>> A, std::vector<K> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(A[piv][col])) ++piv;
    if (piv == n) throw Error(ErrorKind::DivisionByZero, "singular residue system");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(A[r][col])) continue;
      K factor = A[r][col] / A[col][col];
      for (std::size_t k = col; k < n; ++k) A[r][k] -= factor * A[col][k];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<K> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
  return x;
}

template <class K>
std::vector<K> fit_points() {
  std::vector<K> out;
  const long nums[] = {1, 2, -3, 5, -7, 11, 13, -17, 19, 23};
  const long dens[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (int i = 0; i < 10; ++i) out.push_back(K(Rational(nums[i], dens[i])));
  return out;
}

template <class K>
void fill_tails(const Params<K>& p, Fn<K>& g, int m) {
  for (std::size_t t = 0; t < p.base.tails.size(); ++t)
    g[m + t] = RF<K>(g[p.base.tails[t].anchor.component].eval(p.anchor[t]));
}

}  // namespace

template <class K>
Table<K> realize(const Params<K>& p) {
  const Curve& c = p.base;
  if (!coordinate_realizable(c)) throw Error(ErrorKind::Unsupported, "curve has no coordinate model");
  const int n = c.n;
  const int m = c.core.component_count();
  const int comps = m + static_cast<int>(c.tails.size());
  const CoreKind kind = c.core.kind;
  Table<K> t;
  t.n = n;
  t.core = kind;
  t.core_components = m;
  t.total_components = comps;
  t.component.assign(n + 1, -1);
  t.chart.assign(n + 1, 0);
  t.x.assign(n + 1, K(0));
  for (int j = 1; j <= n; ++j) {
    int k = core_of_mark(c, j);
    t.component[j] = k >= 0 ? k : m + tail_of_mark(c, j);
    t.chart[j] = k >= 0;
    t.x[j] = k >= 0 ? p.scaling[j] : K(0);
  }
  auto zero2 = [&] { return std::vector<std::vector<K>>(n + 1, std::vector<K>(n + 1, K(0))); };
  t.a = zero2();
  t.b = zero2();
  t.e = zero2();
  t.pi.assign(n + 1, K(0));
  t.s.assign(n + 1, K(0));
  t.c.assign(n + 1, zero2());
  t.f.assign(n + 1, Fn<K>());
  t.h.assign(n + 1, Fn<K>());
  t.hij.assign(n + 1, std::vector<Fn<K>>(n + 1));

  auto coordinate = [&](int j) { return mark_coordinate<K>(kind, p.position[j], p.scaling[j]); };

  for (int i = 1; i <= n; ++i) {
    if (!t.chart[i]) continue;
    const int Ki = t.component[i];
    const RF<K> U = coordinate(i);
    const K xi = p.scaling[i];
    Fn<K> f(comps), h(comps);
    if (kind == CoreKind::Fold) {
      f[Ki] = U * U;
      h[Ki] = U * U * U;
    } else {
      const K phi2 = xi * xi;
      for (int k = 0; k < m; ++k) f[k] = RF<K>(phi2 / K(3));
      f[Ki] = U * U - RF<K>(K(2) * phi2 / K(3));
      h[Ki] = U * (U * U - RF<K>(phi2));
    }
    fill_tails(p, f, m);
    fill_tails(p, h, m);
    t.f[i] = f;
    t.h[i] = h;

    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Fn<K> g(comps);
      K a(0);
      const int Kj = t.component[j];
      if (!t.chart[j]) {
        // Normalized linear function on j's tail vanishing at the attaching point.
        g[Kj] = mark_coordinate<K>(CoreKind::Fold, p.position[j], p.scaling[j]);
      } else if (Kj == Ki) {
        const K lambda = U.eval(p.position[j]);
        const K shift = kind == CoreKind::Fold ? K(0) : xi * xi;
        const RF<K> base =
            (U * U - RF<K>(lambda) * U + RF<K>(lambda * lambda - shift)) / (U - RF<K>(lambda));
        if (kind == CoreKind::Fold) {
          a = -p.scaling[j] / xi;
        } else {
          // Residue matching against j's own coordinate fixes the scale.
          a = coordinate(j).residue(p.position[j]) / base.residue(p.position[j]);
        }
        g[Ki] = RF<K>(a) * base;
        if (kind == CoreKind::Fold) {
          const K at_q = g[Ki].eval(K(0));
          for (int k = 0; k < m; ++k)
            if (k != Ki) g[k] = RF<K>(at_q);
        } else {
          K value = g[Ki].eval(K(1));
          for (int step = 1; step < m; ++step) g[(Ki + step) % m] = RF<K>(value);
        }
      } else if (kind == CoreKind::Fold) {
        a = -p.scaling[j] / xi;
        g[Ki] = RF<K>(a) * U;
        g[Kj] = coordinate(j);
      } else {
        // Unknowns alpha, beta, a with g|E_j = (alpha w + beta)/(w - mu_j):
        // continuity at both ends of the arc and residue matching at p_j.
        const K mu = p.position[j];
        const K up = U.eval(K(1)), down = U.eval(K(-1));
        const K r = coordinate(j).residue(mu);
        std::vector<std::vector<K>> A = {
            {K(-1), K(1), up * (K(1) + mu)},
            {K(1), K(1), -(down * (K(1) - mu))},
            {mu, K(1), K(0)},
        };
        std::vector<K> sol = solve_linear<K>(A, {K(0), K(0), r});
        a = sol[2];
        g[Ki] = RF<K>(a) * U;
        g[Kj] = lin_frac<K>(sol[0], sol[1], K(1), -mu);
        for (int k = (Ki + 1) % m; k != Kj; k = (k + 1) % m) g[k] = RF<K>(a * up);
        for (int k = (Kj + 1) % m; k != Ki; k = (k + 1) % m) g[k] = RF<K>(a * down);
      }
      if (t.chart[j]) fill_tails(p, g, m);
      t.a[i][j] = a;
      t.hij[i][j] = std::move(g);
    }

    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const int Kj = t.component[j];
      t.b[i][j] = t.f[i][Kj].eval(p.position[j]);
      t.e[i][j] = t.h[i][Kj].eval(p.position[j]);
      for (int jp = 1; jp <= n; ++jp) {
        if (jp == i || jp == j) continue;
        t.c[i][j][jp] = t.hij[i][j][t.component[jp]].eval(p.position[jp]);
      }
    }

    // h^2 - f^3 = pi f + s: solve from two points on E_i, verified as an identity later.
    std::vector<std::pair<K, K>> samples;  // (f, h^2 - f^3)
    for (const K& w : fit_points<K>()) {
      if (!f[Ki].regular_at(w) || !h[Ki].regular_at(w)) continue;
      K fv = f[Ki].eval(w), hv = h[Ki].eval(w);
      K rhs = hv * hv - fv * fv * fv;
      if (!samples.empty() && samples[0].first == fv) continue;
      samples.emplace_back(fv, rhs);
      if (samples.size() == 2) break;
    }
    if (samples.size() < 2) throw Error(ErrorKind::DivisionByZero, "no generic fitting points");
    t.pi[i] = (samples[0].second - samples[1].second) / (samples[0].first - samples[1].first);
    t.s[i] = samples[0].second - t.pi[i] * samples[0].first;
  }
  return t;
}

IdentityCheck& IdentityReport::entry(const std::string& tag) {
  for (auto& c : checks)
    if (c.tag == tag) return c;
  checks.push_back({tag, 0, 0, {}});
  return checks.back();
}

bool IdentityReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  return true;
}

std::vector<std::pair<std::string, bool>> IdentityReport::status() const {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& c : checks) out.emplace_back(c.tag, c.holds());
  return out;
}

void IdentityReport::merge(const IdentityReport& other) {
  for (const auto& c : other.checks) {
    IdentityCheck& mine = entry(c.tag);
    mine.instances += c.instances;
    mine.failures += c.failures;
    if (mine.witness.empty()) mine.witness = c.witness;
  }
}

namespace {

template <class K>
void record(IdentityReport& r, const std::string& tag, bool ok, const std::string& where) {
  IdentityCheck& c = r.entry(tag);
  ++c.instances;
  if (!ok) {
    ++c.failures;
    if (c.witness.empty()) c.witness = where;
  }
}

std::string idx(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string s;
  for (const auto& [name, v] : parts) {
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

template <class K>
IdentityReport realization_checks(const Params<K>& p, const Table<K>& t) {
  IdentityReport r;
  const int n = t.n, m = t.core_components;
  const CoreKind kind = t.core;
  auto check_fn = [&](const Fn<K>& g, const std::string& name) {
    if (kind == CoreKind::Fold) {
      K at_q = g[0].eval(K(0));
      K slope(0);
      bool ok = true;
      for (int k = 0; k < m; ++k) {
        if (!(g[k].eval(K(0)) == at_q)) ok = false;
        slope += g[k].derivative().eval(K(0));
      }
      record<K>(r, "fold-gluing", ok && is_zero(slope), name);
    } else {
      bool ok = true;
      for (int k = 0; k < m; ++k)
        if (!(g[k].eval(K(1)) == g[(k + 1) % m].eval(K(-1)))) ok = false;
      record<K>(r, "node-continuity", ok, name);
    }
    for (std::size_t tl = 0; tl < p.base.tails.size(); ++tl) {
      const int k = p.base.tails[tl].anchor.component;
      record<K>(r, "tail-attachment", g[m + tl].eval(K(0)) == g[k].eval(p.anchor[tl]), name + " tail=" + std::to_string(tl));
    }
  };
  for (int i = 1; i <= n; ++i) {
    if (!t.chart[i]) continue;
    const int Ki = t.component[i];
    const RF<K> U = mark_coordinate<K>(kind, p.position[i], p.scaling[i]);
    check_fn(t.f[i], "f " + idx({{"i", i}}));
    check_fn(t.h[i], "h " + idx({{"i", i}}));
    // Only the leading Laurent term at p_i is pinned.
    record<K>(r, "pole-normalization", (t.f[i][Ki] - U * U).pole_order(p.position[i]) < 2, "f " + idx({{"i", i}}));
    record<K>(r, "pole-normalization", (t.h[i][Ki] - U * U * U).pole_order(p.position[i]) < 3, "h " + idx({{"i", i}}));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Fn<K>& g = t.hij[i][j];
      check_fn(g, "h_ij " + idx({{"i", i}, {"j", j}}));
      record<K>(r, "pole-normalization", (g[Ki] - RF<K>(t.a[i][j]) * U).regular_at(p.position[i]),
                "h_ij at p_i " + idx({{"i", i}, {"j", j}}));
      if (t.chart[j]) {
        const RF<K> Uj = mark_coordinate<K>(kind, p.position[j], p.scaling[j]);
        record<K>(r, "pole-normalization", (g[t.component[j]] - Uj).regular_at(p.position[j]),
                  "h_ij at p_j " + idx({{"i", i}, {"j", j}}));
      }
    }
  }
  return r;
}

template <class K>
Globals<K> global_sections(const Table<K>& t, IdentityReport* report) {
  const int n = t.n;
  Globals<K> g;
  auto zero2 = [&] { return std::vector<std::vector<K>>(n + 1, std::vector<K>(n + 1, K(0))); };
  g.B = zero2();
  g.E = zero2();
  g.Pi.assign(n + 1, K(0));
  g.S.assign(n + 1, K(0));
  g.C.assign(n + 1, zero2());
  std::vector<int> charts;
  for (int k = 1; k <= n; ++k)
    if (t.chart[k]) charts.push_back(k);
  const auto& a = t.a;
  const auto& b = t.b;
  const auto& e = t.e;
  const auto& c = t.c;
  const auto& x = t.x;
  auto settle = [&](const std::vector<K>& candidates, const std::string& tag, const std::string& where) {
    for (std::size_t q = 1; q < candidates.size() && report; ++q)
      record<K>(*report, tag, candidates[q] == candidates[0], where);
    return candidates.empty() ? K(0) : candidates[0];
  };

  std::vector<K> pi_norm, s_norm;
  for (int k : charts) {
    K x2 = x[k] * x[k];
    pi_norm.push_back(t.pi[k] / (x2 * x2));
    s_norm.push_back(t.s[k] / (x2 * x2 * x2));
  }
  const K Pi = settle(pi_norm, "global-fun-sec-prop(i)", "Pi");
  const K S = settle(s_norm, "global-fun-sec-prop(i)", "S");
  for (int i = 1; i <= n; ++i) {
    K x2 = x[i] * x[i];
    g.Pi[i] = x2 * x2 * Pi;
    g.S[i] = x2 * x2 * x2 * S;
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::vector<K> Bc, Ec;
      for (int k : charts) {
        if (k == i) {
          Bc.push_back(b[i][j]);
          Ec.push_back(e[i][j]);
        } else if (k == j) {
          K aji = a[j][i];
          Bc.push_back(aji * aji * b[j][i]);
          Ec.push_back(aji * aji * aji * e[j][i]);
        } else {
          K aki = a[k][i], cij = c[k][i][j];
          Bc.push_back(cij * cij - aki * aki * b[k][j] - aki * aki * b[k][i]);
          Ec.push_back(cij * cij * cij - aki * aki * aki * e[k][j] - K(3) * aki * aki * b[k][i] * cij -
                       K(2) * aki * aki * aki * e[k][i]);
        }
      }
      g.B[i][j] = settle(Bc, "global-fun-sec-prop(ii)", "B " + idx({{"i", i}, {"j", j}}));
      g.E[i][j] = settle(Ec, "global-fun-sec-prop(ii)", "E " + idx({{"i", i}, {"j", j}}));
    }
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int jp = 1; jp <= n; ++jp) {
        if (i == j || i == jp || j == jp) continue;
        std::vector<K> Cc;
        for (int k : charts) {
          if (k == i) {
            Cc.push_back(c[i][j][jp] * x[i]);
          } else if (k == j) {
            Cc.push_back(-(c[j][i][jp] * x[j]));
          } else if (k == jp) {
            Cc.push_back(-(a[jp][j] * c[jp][i][j] * x[jp]));
          } else {
            Cc.push_back((-(a[k][i] * c[k][j][jp]) + a[k][j] * c[k][i][jp] + a[k][i] * c[k][j][i]) * x[k]);
          }
        }
        g.C[i][j][jp] = settle(Cc, "global-fun-sec-prop(iii)", "C " + idx({{"i", i}, {"j", j}, {"j'", jp}}));
      }
  return g;
}

template <class K>
Table<K> weight_act(const Table<K>& t, const std::vector<K>& lambda) {
  const int n = t.n;
  if (static_cast<int>(lambda.size()) < n) throw Error(ErrorKind::DimensionMismatch, "lambda too short");
  for (int i = 0; i < n; ++i)
    if (is_zero(lambda[i])) throw Error(ErrorKind::ZeroLambda, "lambda_" + std::to_string(i + 1) + " = 0");
  auto L = [&](int i) { return lambda[i - 1]; };
  Table<K> r = t;
  auto scale_fn = [](Fn<K>& g, const K& k) {
    for (auto& piece : g) piece = RF<K>(k) * piece;
  };
  for (int i = 1; i <= n; ++i) {
    const K l = L(i), l2 = l * l, l3 = l2 * l;
    r.x[i] = t.x[i] * l;
    r.pi[i] = t.pi[i] * l2 * l2;
    r.s[i] = t.s[i] * l3 * l3;
    if (!r.f[i].empty()) {
      scale_fn(r.f[i], l2);
      scale_fn(r.h[i], l3);
    }
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      r.a[i][j] = t.a[i][j] * L(j) / l;
      r.b[i][j] = t.b[i][j] * l2;
      r.e[i][j] = t.e[i][j] * l3;
      if (!r.hij[i][j].empty()) scale_fn(r.hij[i][j], L(j));
      for (int jp = 1; jp <= n; ++jp)
        if (jp != i && jp != j) r.c[i][j][jp] = t.c[i][j][jp] * L(j);
    }
  }
  return r;
}

template <class K>
Table<K> mutate_one_value(const Table<K>& t) {
  Table<K> r = t;
  for (int i = 1; i <= t.n; ++i) {
    if (!t.chart[i]) continue;
    for (int j = 1; j <= t.n; ++j)
      for (int jp = 1; jp <= t.n; ++jp)
        if (j != i && jp != i && j != jp) {
          r.c[i][j][jp] += K(1);
          return r;
        }
  }
  for (int i = 1; i <= t.n; ++i) {
    if (!t.chart[i]) continue;
    for (int j = 1; j <= t.n; ++j)
      if (j != i) {
        r.b[i][j] += K(1);
        return r;
      }
  }
  for (int i = 1; i <= t.n; ++i)
    if (t.chart[i]) {
      r.s[i] += K(1);
      return r;
    }
  return r;
}

VanishingProfile vanishing_profile(const Table<Rational>& t) {
  Globals<Rational> g = global_sections(t);
  VanishingProfile v;
  for (int i = 1; i <= t.n; ++i) {
    if (sgn(t.x[i])) v.omega1.push_back(i);
    bool ray = sgn(g.Pi[i]) != 0;
    for (int j = 1; j <= t.n && !ray; ++j)
      if (j != i && (sgn(g.B[i][j]) || sgn(g.E[i][j]))) ray = true;
    if (ray) v.omega0.push_back(i);
  }
  return v;
}

void require_chart(const Table<Rational>& t, int i) {
  if (i < 1 || i > t.n) throw Error(ErrorKind::Parse, "chart index out of range");
  if (!t.chart[i]) throw Error(ErrorKind::ChartInvalid, "mark " + std::to_string(i) + " lies on a tail");
}

namespace {

template <class K>
bool check_constants(const Table<K>& t, std::string& note) {
  for (int i = 1; i <= t.n; ++i) {
    if (!t.chart[i]) continue;
    const K x2 = t.x[i] * t.x[i];
    const K pi = t.pi[i] / (x2 * x2), s = t.s[i] / (x2 * x2 * x2);
    bool ok;
    if (t.core == CoreKind::Fold) {
      ok = is_zero(pi) && is_zero(s);
    } else {
      ok = pi == K(Rational(-1, 3)) && s == K(Rational(2, 27)) && is_zero(K(4) * pi * pi * pi + K(27) * s * s);
    }
    if (!ok) {
      note = "chart " + std::to_string(i) + ": pi/x^4 = " + scalar_str(pi) + ", s/x^6 = " + scalar_str(s);
      return false;
    }
  }
  return true;
}

}  // namespace

IdentityRun run_identity_suite(CoreKind kind, int m, int n, int tail_marks, std::uint64_t seed, int draws,
                               bool symbolic) {
  IdentityRun run;
  run.core = kind == CoreKind::Fold ? "fold" : "ngon";
  run.m = m;
  run.n = n;
  run.tail_marks = tail_marks;
  run.draws = draws;
  run.symbolic = symbolic;
  const Curve base = standard_core_curve(kind, m, n, tail_marks);
  std::mt19937_64 rng(seed);
  for (int d = 0; d < draws; ++d) {
    Params<Rational> p = numeric_params(random_coordinatized(base, rng));
    Table<Rational> t = realize(p);
    IdentityReport r = realization_checks(p, t);
    r.merge(verify_identities(t));
    for (auto& c : r.checks)
      if (!c.witness.empty()) c.witness = "draw " + std::to_string(d) + ": " + c.witness;
    run.report.merge(r);
    std::string note;
    if (run.constants_ok && !check_constants(t, note)) {
      run.constants_ok = false;
      run.constants_note = note;
    }
  }
  if (symbolic) {
    Params<Sym> p = symbolic_params(base);
    Table<Sym> t = realize(p);
    IdentityReport r = realization_checks(p, t);
    r.merge(verify_identities(t));
    for (auto& c : r.checks)
      if (!c.witness.empty()) c.witness = "symbolic: " + c.witness;
    run.report.merge(r);
    std::string note;
    if (run.constants_ok && !check_constants(t, note)) {
      run.constants_ok = false;
      run.constants_note = "symbolic " + note;
    }
  }
  return run;
}

template Table<Rational> realize(const Params<Rational>&);
template Table<Sym> realize(const Params<Sym>&);
template IdentityReport realization_checks(const Params<Rational>&, const Table<Rational>&);
template IdentityReport realization_checks(const Params<Sym>&, const Table<Sym>&);
template Globals<Rational> global_sections(const Table<Rational>&, IdentityReport*);
template Globals<Sym> global_sections(const Table<Sym>&, IdentityReport*);
template Table<Rational> weight_act(const Table<Rational>&, const std::vector<Rational>&);
template Table<Sym> weight_act(const Table<Sym>&, const std::vector<Sym>&);
template Table<Rational> mutate_one_value(const Table<Rational>&);
template Table<Sym> mutate_one_value(const Table<Sym>&);

}  // namespace git1
