#include <algorithm>
#include <deque>
#include <mutex>

#include "git1/errors.hpp"
#include "git1/symbolic.hpp"

namespace git1 {

namespace {

using Mono = Poly::Mono;

void trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// a / b when b divides a.
std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i]) return std::nullopt;
  }
  Mono r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i >= r.size()) break;
    if (r[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

int exponent(const Mono& m, int v) { return v < static_cast<int>(m.size()) ? m[v] : 0; }

// f as a polynomial in x_v with coefficients free of x_v.
std::map<int, Poly> coefficients_in(const Poly& f, int v) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : f.terms()) {
    Mono rest = m;
    int e = exponent(m, v);
    if (v < static_cast<int>(rest.size())) rest[v] = 0;
    trim(rest);
    out[e].add_term(rest, c);
  }
  return out;
}

Poly monomial(int v, int e) {
  Poly p;
  Mono m(v + 1, 0);
  m[v] = e;
  trim(m);
  p.add_term(m, 1);
  return p;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_coeff());
}

Poly exact(const Poly& f, const Poly& g) {
  auto q = Poly::divide_exact(f, g);
  if (!q) throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
  return *q;
}

Poly content_in(const Poly& f, int v) {
  Poly g;
  for (const auto& [e, c] : coefficients_in(f, v)) {
    g = Poly::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of f by g with respect to x_v.
Poly pseudo_remainder(Poly f, const Poly& g, int v) {
  const int dg = g.degree_in(v);
  const Poly lc = coefficients_in(g, v).at(dg);
  while (!f.is_zero()) {
    const int df = f.degree_in(v);
    if (df < dg) break;
    Poly lf = coefficients_in(f, v).at(df);
    f = lc * f - lf * monomial(v, df - dg) * g;
  }
  return f;
}

// Coefficients in x_v after substituting values for the other variables.
std::vector<Rational> specialize(const Poly& f, int v, const std::vector<Rational>& point) {
  std::vector<Rational> out(f.degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t u = 0; u < m.size(); ++u) {
      if (static_cast<int>(u) == v) continue;
      for (int k = 0; k < m[u]; ++k) t *= point[u];
    }
    out[exponent(m, v)] += t;
  }
  return out;
}

int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim_r = [](std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim_r(a);
  trim_r(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      a.pop_back();
      trim_r(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool has_variable(const Poly& f, int v) { return f.degree_in(v) > 0; }

// True only when gcd(f, g) is certainly constant: for every shared variable v
// some specialization of the others that keeps both leading coefficients in
// x_v nonzero gives coprime univariate images.
bool certainly_coprime(const Poly& f, const Poly& g) {
  const int top = std::max(f.max_variable(), g.max_variable());
  for (int v = 0; v <= top; ++v) {
    if (!has_variable(f, v) || !has_variable(g, v)) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::vector<Rational> point(top + 1);
      for (int u = 0; u <= top; ++u) point[u] = Rational(3 + 7 * u + 11 * attempt + u * u * (attempt + 2), 1);
      auto fs = specialize(f, v, point), gs = specialize(g, v, point);
      if (sgn(fs.back()) == 0 || sgn(gs.back()) == 0) continue;
      if (univariate_gcd_degree(fs, gs) > 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace

Poly::Poly(long c) {
  if (c) terms_.emplace(Mono{}, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (sgn(c)) terms_.emplace(Mono{}, c);
}

Poly Poly::variable(int v) { return monomial(v, 1); }

void Poly::add_term(Mono m, const Rational& c) {
  if (sgn(c) == 0) return;
  trim(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Poly::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::max_variable() const {
  int v = -1;
  for (const auto& [m, c] : terms_) v = std::max(v, static_cast<int>(m.size()) - 1);
  return v;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& q) const {
  if (sgn(q) == 0) return {};
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c *= q;
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly q, r = f;
  const Mono& lg = g.leading_mono();
  const Rational& cg = g.leading_coeff();
  while (!r.is_zero()) {
    auto m = mono_div(r.leading_mono(), lg);
    if (!m) return std::nullopt;
    Poly t;
    t.add_term(*m, r.leading_coeff() / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

Poly Poly::gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return make_monic(g);
  if (g.is_zero()) return make_monic(f);
  if (f.is_constant() || g.is_constant()) return Poly(1);
  if (certainly_coprime(f, g)) return Poly(1);
  int v = std::max(f.max_variable(), g.max_variable());
  for (int u = 0, best = -1; u <= v; ++u) {
    if (!has_variable(f, u) || !has_variable(g, u)) continue;
    const int cost = std::max(f.degree_in(u), g.degree_in(u));
    if (best < 0 || cost < best) {
      best = cost;
      v = u;
    }
  }
  if (f.degree_in(v) == 0) return gcd(f, content_in(g, v));
  if (g.degree_in(v) == 0) return gcd(content_in(f, v), g);
  const Poly cf = content_in(f, v), cg = content_in(g, v);
  Poly a = exact(f, cf), b = exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(v) > 0) {
    Poly r = pseudo_remainder(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly();
    } else {
      b = exact(r, content_in(r, v));
    }
  }
  Poly c = gcd(cf, cg);
  if (!b.is_zero()) return c;  // the sequence ended in a unit in x_v
  return make_monic(c * exact(a, content_in(a, v)));
}

Rational Poly::eval(const RatVec& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (i >= point.size()) throw Error(ErrorKind::DimensionMismatch, "evaluation point too short");
      mpz_class numer, denom;
      mpz_pow_ui(numer.get_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(denom.get_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      t *= Rational(numer, denom);
    }
    s += t;
  }
  s.canonicalize();
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational a = abs(c);
    std::string coeff = to_string(a);
    std::string term = mono.empty() ? coeff : (a == 1 ? mono : coeff + "*" + mono);
    if (first) {
      s = sgn(c) < 0 ? "-" + term : term;
    } else {
      s += sgn(c) < 0 ? " - " + term : " + " + term;
    }
    first = false;
  }
  return s;
}

namespace {

// Interned denominator atoms. An atom that later shares a factor with a new
// polynomial is split; `parts` then lists its replacement atoms.
struct AtomTable {
  std::mutex mu;
  std::deque<Poly> polys;
  std::deque<std::vector<int>> parts;  // empty while the atom is active

  int add(const Poly& p) {
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (parts[i].empty() && polys[i] == p) return static_cast<int>(i);
    polys.push_back(p);
    parts.emplace_back();
    return static_cast<int>(polys.size()) - 1;
  }
};

AtomTable& atoms() {
  static AtomTable table;
  return table;
}

void add_factor(Sym::Factors& f, int id, int e) {
  for (auto& [a, x] : f)
    if (a == id) {
      x += e;
      return;
    }
  f.push_back({id, e});
  std::sort(f.begin(), f.end());
}

// Rewrites split atoms into their active parts. Caller holds the lock.
Sym::Factors resolve(const AtomTable& t, const Sym::Factors& f) {
  Sym::Factors out;
  std::vector<std::pair<int, int>> stack(f.rbegin(), f.rend());
  while (!stack.empty()) {
    auto [id, e] = stack.back();
    stack.pop_back();
    if (t.parts[id].empty()) {
      add_factor(out, id, e);
    } else {
      for (int part : t.parts[id]) stack.push_back({part, e});
    }
  }
  return out;
}

// Splits monic p into active atoms, refining the table so atoms stay
// pairwise coprime. Returns the factorization. Caller holds the lock.
Sym::Factors factor_into_atoms(AtomTable& t, Poly p) {
  Sym::Factors out;
  // Variable powers first: they are irreducible and very common.
  for (int v = 0; v <= p.max_variable(); ++v) {
    int low = -1;
    for (const auto& [m, c] : p.terms()) {
      int e = exponent(m, v);
      low = low < 0 ? e : std::min(low, e);
    }
    if (low > 0) {
      p = exact(p, monomial(v, low));
      add_factor(out, t.add(Poly::variable(v)), low);
    }
  }
  std::vector<Poly> pending;
  if (!p.is_constant()) pending.push_back(make_monic(p));
  while (!pending.empty()) {
    Poly q = pending.back();
    pending.pop_back();
    bool placed = false;
    for (std::size_t id = 0; id < t.polys.size() && !placed; ++id) {
      if (!t.parts[id].empty()) continue;
      const Poly a = t.polys[id];
      if (auto quo = Poly::divide_exact(q, a)) {
        add_factor(out, static_cast<int>(id), 1);
        if (!quo->is_constant()) pending.push_back(make_monic(*quo));
        placed = true;
        break;
      }
      Poly g = Poly::gcd(q, a);
      if (g.is_constant()) continue;
      // a = g * (a / g): retire a in favour of its parts.
      Poly rest = make_monic(exact(a, g));
      int gid = t.add(g);
      std::vector<int> split{gid};
      if (!rest.is_constant()) split.push_back(t.add(rest));
      t.parts[id] = split;
      pending.push_back(q);  // retry against the refined table
      placed = true;
    }
    if (!placed) add_factor(out, t.add(q), 1);
  }
  return resolve(t, out);
}

Poly expand_factors(const AtomTable& t, const Sym::Factors& f) {
  Poly r(1);
  for (const auto& [id, e] : f)
    for (int k = 0; k < e; ++k) r = r * t.polys[id];
  return r;
}

}  // namespace

Sym::Sym(const Rational& c) : num_(c) {}

Sym::Sym(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "symbolic division by zero");
  if (num.is_zero()) return;
  num_ = num.scaled(1 / den.leading_coeff());
  AtomTable& t = atoms();
  {
    std::lock_guard<std::mutex> lock(t.mu);
    den_ = factor_into_atoms(t, make_monic(den));
  }
  reduce();
}

Sym Sym::variable(int v) {
  Sym s;
  s.num_ = Poly::variable(v);
  return s;
}

Poly Sym::den() const {
  AtomTable& t = atoms();
  std::lock_guard<std::mutex> lock(t.mu);
  return expand_factors(t, resolve(t, den_));
}

void Sym::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  if (den_.empty()) return;
  AtomTable& t = atoms();
  std::vector<Poly> polys;
  {
    std::lock_guard<std::mutex> lock(t.mu);
    den_ = resolve(t, den_);
    for (const auto& [id, e] : den_) polys.push_back(t.polys[id]);
  }
  Factors kept;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    int e = den_[k].second;
    while (e > 0) {
      auto q = Poly::divide_exact(num_, polys[k]);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
    if (e > 0) kept.push_back({den_[k].first, e});
  }
  den_ = std::move(kept);
}

namespace {

// Common denominator of a and b, with each side's missing cofactor.
struct Common {
  Sym::Factors den;
  Poly lift_a, lift_b;
};

Common common_denominator(const Sym::Factors& a, const Sym::Factors& b) {
  AtomTable& t = atoms();
  std::lock_guard<std::mutex> lock(t.mu);
  Sym::Factors ra = resolve(t, a), rb = resolve(t, b);
  Common c;
  c.den = ra;
  for (const auto& [id, e] : rb) {
    bool found = false;
    for (auto& [x, f] : c.den)
      if (x == id) {
        f = std::max(f, e);
        found = true;
      }
    if (!found) add_factor(c.den, id, e);
  }
  auto missing = [&](const Sym::Factors& side) {
    Sym::Factors m;
    for (const auto& [id, e] : c.den) {
      int have = 0;
      for (const auto& [x, f] : side)
        if (x == id) have = f;
      if (e > have) m.push_back({id, e - have});
    }
    return expand_factors(t, m);
  };
  c.lift_a = missing(ra);
  c.lift_b = missing(rb);
  return c;
}

}  // namespace

bool Sym::operator==(const Sym& o) const {
  if (num_ == o.num_ && den_ == o.den_) return true;
  if (num_.is_zero() || o.num_.is_zero()) return false;
  Common c = common_denominator(den_, o.den_);
  return num_ * c.lift_a == o.num_ * c.lift_b;
}

Sym Sym::operator-() const {
  Sym r = *this;
  r.num_ = -r.num_;
  return r;
}

Sym operator+(const Sym& a, const Sym& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Sym r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    Common c = common_denominator(a.den_, b.den_);
    r.num_ = a.num_ * c.lift_a + b.num_ * c.lift_b;
    r.den_ = c.den;
  }
  r.reduce();
  return r;
}

Sym operator-(const Sym& a, const Sym& b) { return a + (-b); }

Sym operator*(const Sym& a, const Sym& b) {
  if (a.is_zero() || b.is_zero()) return Sym();
  Sym r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [id, e] : b.den_) add_factor(r.den_, id, e);
  r.reduce();
  return r;
}

Sym operator/(const Sym& a, const Sym& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "symbolic division by zero");
  return a * Sym(b.den(), b.num_);
}

Rational Sym::eval(const RatVec& point) const {
  Rational d = den().eval(point);
  if (sgn(d) == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string Sym::str() const {
  if (den_.empty()) return num_.str();
  return "(" + num_.str() + ")/(" + den().str() + ")";
}

}  // namespace git1
