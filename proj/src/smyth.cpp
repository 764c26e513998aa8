#include "git1/smyth.hpp"

#include <algorithm>
#include <map>

#include "git1/errors.hpp"
#include "git1/lp.hpp"
#include "git1/stability.hpp"

namespace git1 {

bool is_m_stable(const Curve& input, int m) {
  if (m < 1) throw Error(ErrorKind::Parse, "m must be at least 1");
  const Curve c = validate_curve(input, true);
  for (const Tail& t : c.tails) {
    if (t.anchor.kind != AnchorKind::SmoothPoint)
      throw Error(ErrorKind::InvalidForMStability, "tail anchored at a singular point of the core");
    for (const Joint& j : t.joints)
      if (j.attached.size() != 1)
        throw Error(ErrorKind::InvalidForMStability, "tail has a non-nodal attachment point");
  }
  if (c.core.kind == CoreKind::Fold && c.core.m > m) return false;
  std::size_t level = c.tails.size();
  for (const auto& marks : c.core_marks) level += marks.size();
  if (static_cast<int>(level) <= m) return false;
  bool fold_has_three = false;
  for (const SpecialPoints& sp : special_point_counts(c)) {
    if (!sp.where.core) {
      if (sp.on_component < 3) return false;
      continue;
    }
    switch (c.core.kind) {
      case CoreKind::Smooth:
        if (sp.on_component < 1) return false;
        break;
      case CoreKind::Ngon:
        if (sp.on_normalization < 3) return false;
        break;
      case CoreKind::Fold:
        if (sp.on_component < 2) return false;
        if (sp.on_component >= 3) fold_has_three = true;
        break;
    }
  }
  return c.core.kind != CoreKind::Fold || fold_has_three;
}

bool is_zu_stable(const Curve& input) {
  const Curve c = validate_curve(input, false);
  for (const SpecialPoints& sp : special_point_counts(c)) {
    if (sp.where.core && c.core.kind == CoreKind::Smooth) continue;
    if (sp.on_normalization < 3) return false;
  }
  return true;
}

std::optional<InclusionMode> parse_inclusion_mode(const std::string& s) {
  if (s == "n-1") return InclusionMode::NMinus1;
  if (s == "n-2") return InclusionMode::NMinus2;
  if (s == "n-3") return InclusionMode::NMinus3;
  return std::nullopt;
}

std::string inclusion_mode_name(InclusionMode mode) {
  switch (mode) {
    case InclusionMode::NMinus1: return "n-1";
    case InclusionMode::NMinus2: return "n-2";
    case InclusionMode::NMinus3: return "n-3";
  }
  return {};
}

int inclusion_m(InclusionMode mode, int n) {
  switch (mode) {
    case InclusionMode::NMinus1: return n - 1;
    case InclusionMode::NMinus2: return n - 2;
    case InclusionMode::NMinus3: return n - 3;
  }
  return 0;
}

namespace {

// Largest and smallest sums of chi over subsets of the given size.
Rational extreme_subset_sum(const RatVec& chi, int size, bool largest) {
  RatVec sorted = chi;
  std::sort(sorted.begin(), sorted.end());
  if (largest) std::reverse(sorted.begin(), sorted.end());
  Rational s = 0;
  for (int i = 0; i < size; ++i) s += sorted[i];
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::HypothesisViolated, what);
}

}  // namespace

void check_inclusion_hypothesis(InclusionMode mode, const RatVec& chi, int n) {
  if (static_cast<int>(chi.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "character length differs from n");
  const int m = inclusion_m(mode, n);
  require(m >= 1, "m = " + std::to_string(m) + " must be at least 1");
  for (int i = 0; i < n; ++i) require(chi[i] >= 0, "a_" + std::to_string(i + 1) + " is negative");
  switch (mode) {
    case InclusionMode::NMinus1:
      require(extreme_subset_sum(chi, n, false) >= 1, "sum of all a_i is below 1");
      require(extreme_subset_sum(chi, n - 2, true) <= 1, "some sum over n-2 indices exceeds 1");
      break;
    case InclusionMode::NMinus2:
      require(extreme_subset_sum(chi, n - 2, false) >= 1, "some sum over n-2 indices is below 1");
      require(extreme_subset_sum(chi, n - 3, true) <= 1, "some sum over n-3 indices exceeds 1");
      break;
    case InclusionMode::NMinus3:
      require(n > 4, "requires n > 4");
      for (int i = 0; i < n; ++i)
        require(chi[i] == Rational(1, n - 4), "a_" + std::to_string(i + 1) + " differs from 1/(n-4)");
      break;
  }
}

std::vector<Curve> enumerate_m_stable(int n, int m, int max_unmarked, std::uint64_t budget) {
  EnumOptions o;
  o.allow_unmarked = true;
  o.max_unmarked = max_unmarked;
  o.max_tail_components = n + max_unmarked;
  o.nodal_smooth_tails = true;
  o.min_tail_special = 3;
  o.budget = budget;
  std::vector<Curve> out;
  for (Curve& c : enumerate_curves(n, o))
    if (is_m_stable(c, m)) out.push_back(std::move(c));
  return out;
}

InclusionReport check_inclusion(InclusionMode mode, const RatVec& chi, int n, int max_unmarked) {
  check_inclusion_hypothesis(mode, chi, n);
  InclusionReport r;
  r.mode = mode;
  r.n = n;
  r.m = inclusion_m(mode, n);
  r.chi = chi;
  for (const Curve& c : enumerate_m_stable(n, r.m, max_unmarked)) {
    ++r.classes_checked;
    Curve image = contract_unmarked(c);
    StabilityVerdict v = is_semistable(image, chi);
    if (!v.semistable) r.violations.push_back({canonical_form(c), canonical_form(image), v.violations});
  }
  return r;
}

ChiWindow uniform_window_of(const Curve& full) {
  IndexSets ix = stability_index_sets(full);
  ChiWindow w;
  w.lower = Rational(0);
  if (ix.I.empty()) {
    // sum over I is 0 < 1 for every a.
    w.lower = Rational(1);
    w.upper = Rational(0);
    return w;
  }
  w.lower = Rational(1, static_cast<long>(ix.I.size()));
  if (!ix.I0.empty()) w.upper = Rational(1, static_cast<long>(ix.I0.size()));
  for (int i = 1; i <= full.n; ++i) {
    bool covered = std::count(ix.I.begin(), ix.I.end(), i) || std::count(ix.J.begin(), ix.J.end(), i);
    if (!covered) {
      w.upper = w.upper ? std::min(*w.upper, Rational(0)) : Rational(0);
      break;
    }
  }
  return w;
}

ChiWindow uniform_chi_window(const std::vector<Curve>& curves, int m) {
  ChiWindow acc;
  for (const Curve& c : curves) {
    if (!is_m_stable(c, m))
      throw Error(ErrorKind::HypothesisViolated, canonical_form(c) + " is not " + std::to_string(m) + "-stable");
    ChiWindow w = uniform_window_of(contract_unmarked(c));
    if (w.lower) acc.lower = acc.lower ? std::max(*acc.lower, *w.lower) : *w.lower;
    if (w.upper) acc.upper = acc.upper ? std::min(*acc.upper, *w.upper) : *w.upper;
  }
  return acc;
}

bool common_chi_exists(const std::vector<Curve>& curves) {
  if (curves.empty()) return true;
  const int n = curves.front().n;
  std::map<std::string, lp::Constraint> rows;
  for (const Curve& c : curves) {
    if (c.n != n) throw Error(ErrorKind::DimensionMismatch, "curves with different n");
    HPolytope p = semistability_polytope(contract_unmarked(c));
    for (const lp::Constraint& k : p.constraints) {
      std::string key = to_string(k.coeffs) + static_cast<char>('0' + static_cast<int>(k.rel)) + to_string(k.rhs);
      rows.emplace(std::move(key), k);
    }
  }
  std::vector<lp::Constraint> cons;
  for (auto& kv : rows) cons.push_back(kv.second);
  return lp::feasible(n, cons, true);
}

}  // namespace git1
