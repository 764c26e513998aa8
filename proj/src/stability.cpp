#include "git1/stability.hpp"

#include <algorithm>

#include "git1/errors.hpp"

namespace git1 {

namespace {

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string sum_name(const char* set) { return std::string("sum_") + set; }

lp::Constraint make(int n, const std::vector<int>& support, lp::Relation rel, const Rational& rhs) {
  lp::Constraint c;
  c.coeffs.assign(n, Rational(0));
  for (int i : support) c.coeffs[i - 1] = 1;
  c.rel = rel;
  c.rhs = rhs;
  return c;
}

Rational eval(const lp::Constraint& c, const RatVec& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (c.coeffs[i] != 0) s += c.coeffs[i] * x[i];
  return s;
}

void check_dim(const Curve& c, const RatVec& chi) {
  if (static_cast<int>(chi.size()) != c.n)
    throw Error(ErrorKind::DimensionMismatch,
                "character has " + std::to_string(chi.size()) + " entries, curve has n=" + std::to_string(c.n));
}

Rational sum_over(const std::vector<int>& s, const RatVec& chi) {
  Rational t = 0;
  for (int i : s) t += chi[i - 1];
  return t;
}

}  // namespace

bool HPolytope::contains(const RatVec& x) const {
  for (const auto& c : constraints) {
    Rational v = eval(c, x);
    switch (c.rel) {
      case lp::Relation::LE: if (v > c.rhs) return false; break;
      case lp::Relation::GE: if (v < c.rhs) return false; break;
      case lp::Relation::EQ: if (v != c.rhs) return false; break;
    }
  }
  return true;
}

HPolytope semistability_polytope(const Curve& c) {
  IndexSets ix = stability_index_sets(c);
  HPolytope p;
  p.n = c.n;
  for (int i = 1; i <= c.n; ++i) {
    p.constraints.push_back(make(c.n, {i}, lp::Relation::GE, 0));
    p.names.push_back("a_" + std::to_string(i) + " >= 0");
  }
  for (int i = 1; i <= c.n; ++i) {
    if (has(ix.I, i) || has(ix.J, i)) continue;
    p.constraints.push_back(make(c.n, {i}, lp::Relation::EQ, 0));
    p.names.push_back("a_" + std::to_string(i) + " = 0");
  }
  p.constraints.push_back(make(c.n, ix.I, lp::Relation::GE, 1));
  p.names.push_back(sum_name("I") + " >= 1");
  if (!ix.I0.empty()) {
    p.constraints.push_back(make(c.n, ix.I0, lp::Relation::LE, 1));
    p.names.push_back(sum_name("I0") + " <= 1");
  }
  return p;
}

StabilityVerdict is_semistable(const Curve& c, const RatVec& chi) {
  check_dim(c, chi);
  StabilityVerdict v;
  v.index_sets = stability_index_sets(c);
  v.finite_reduced_stabilizer = has_finite_reduced_stabilizer(c);
  HPolytope p = semistability_polytope(c);
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const auto& con = p.constraints[k];
    Rational val = eval(con, chi);
    bool ok = con.rel == lp::Relation::LE ? val <= con.rhs
            : con.rel == lp::Relation::GE ? val >= con.rhs
                                           : val == con.rhs;
    if (!ok) v.violations.push_back(p.names[k]);
    else if (val == con.rhs) v.tight.push_back(p.names[k]);
  }
  v.semistable = v.violations.empty();

  const IndexSets& ix = v.index_sets;
  if (!v.finite_reduced_stabilizer) v.strict_violations.push_back("stabilizer not finite and reduced");
  for (int i = 1; i <= c.n; ++i)
    if (chi[i - 1] <= 0) v.strict_violations.push_back("a_" + std::to_string(i) + " > 0");
  if (sum_over(ix.I, chi) <= 1) v.strict_violations.push_back(sum_name("I") + " > 1");
  if (!ix.I0.empty() && sum_over(ix.I0, chi) >= 1) v.strict_violations.push_back(sum_name("I0") + " < 1");
  v.stable = v.strict_violations.empty();
  return v;
}

StabilityVerdict is_stable(const Curve& c, const RatVec& chi) { return is_semistable(c, chi); }

bool has_finite_reduced_stabilizer(const Curve& c) {
  auto sp = special_point_counts(c);
  bool some_fold_rich = false;
  for (const SpecialPoints& s : sp) {
    if (!s.where.core && s.on_component < 3) return false;
    if (s.where.core && s.on_component >= 3) some_fold_rich = true;
  }
  return c.core.kind != CoreKind::Fold || some_fold_rich;
}

OmegaSets omega_sets(const Curve& c) {
  OmegaSets o;
  IndexSets ix = stability_index_sets(c);
  o.omega1 = ix.I;
  o.omega0_rays = ix.J;
  const int m = c.core.component_count();
  for (int k = 0; k < m; ++k) {
    const auto& marks = c.core_marks[k];
    if (c.core.kind != CoreKind::Fold) {
      o.omega0_rays.insert(o.omega0_rays.end(), marks.begin(), marks.end());
      continue;
    }
    // Some other marked point is attached to this branch: on it, or on a
    // tail meeting it at a smooth point.
    bool tail_here = false;
    for (const Tail& t : c.tails) {
      if (t.anchor.kind != AnchorKind::SmoothPoint || t.anchor.component != k) continue;
      for (const auto& comp : t.components)
        if (!comp.empty()) tail_here = true;
    }
    for (int p : marks)
      if (marks.size() >= 2 || tail_here) o.omega0_rays.push_back(p);
  }
  std::sort(o.omega0_rays.begin(), o.omega0_rays.end());
  return o;
}

bool membership_lp(const RatVec& chi, const OmegaSets& omega, int n) {
  if (static_cast<int>(chi.size()) != n) throw Error(ErrorKind::DimensionMismatch, "character length");
  const int t = static_cast<int>(omega.omega1.size());
  const int s = static_cast<int>(omega.omega0_rays.size());
  std::vector<lp::Constraint> cons;
  for (int i = 1; i <= n; ++i) {
    lp::Constraint c;
    c.coeffs.assign(t + s, Rational(0));
    for (int k = 0; k < t; ++k)
      if (omega.omega1[k] == i) c.coeffs[k] = 1;
    for (int k = 0; k < s; ++k)
      if (omega.omega0_rays[k] == i) c.coeffs[t + k] = 1;
    c.rel = lp::Relation::EQ;
    c.rhs = chi[i - 1];
    cons.push_back(std::move(c));
  }
  lp::Constraint simplex;
  simplex.coeffs.assign(t + s, Rational(0));
  for (int k = 0; k < t; ++k) simplex.coeffs[k] = 1;
  simplex.rel = lp::Relation::EQ;
  simplex.rhs = 1;
  cons.push_back(std::move(simplex));
  return lp::feasible(t + s, cons, false);
}

}  // namespace git1
