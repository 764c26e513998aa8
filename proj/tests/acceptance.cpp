#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "git1/chambers.hpp"
#include "git1/errors.hpp"
#include "git1/function_field.hpp"
#include "git1/json_io.hpp"
#include "git1/smyth.hpp"
#include "git1/stability.hpp"
#include "support.hpp"

using namespace git1;
using testing::Gen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Mix of face-hugging and generic characters so both bounds get exercised.
RatVec random_chi(Gen& g, int n) {
  RatVec chi(n);
  const int style = static_cast<int>(g.range(0, 3));
  for (auto& a : chi) {
    switch (style) {
      case 0: a = g.rational(-1, 3, 8); break;
      case 1: a = g.range(0, 2) == 0 ? Rational(0) : g.rational(0, 1, 6); break;
      case 2: a = Rational(g.range(0, 1), 1) / Rational(g.range(1, n)); break;
      default: a = g.range(0, 3) == 0 ? Rational(0) : g.rational(0, 2, 12);
    }
  }
  if (style == 2 && g.range(0, 1) == 0) chi[g.range(0, n - 1)] = Rational(1) - Rational(1, g.range(2, 5));
  return chi;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Gen g(1);
  std::size_t classes = 0, mismatches = 0, semistable_hits = 0, checks = 0;
  std::string first;
  std::size_t counts[5] = {};
  for (int n = 1; n <= 4; ++n) {
    const auto curves = enumerate_curves(n);
    counts[n] = curves.size();
    for (const Curve& c : curves) {
      ++classes;
      const OmegaSets om = omega_sets(c);
      for (int k = 0; k < 200; ++k) {
        const RatVec chi = random_chi(g, n);
        const bool a = is_semistable(c, chi).semistable;
        const bool b = membership_lp(chi, om, n);
        ++checks;
        semistable_hits += a;
        if (a != b) {
          if (first.empty()) first = canonical_form(c) + " at " + to_string(chi);
          ++mismatches;
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream s;
  s << classes << " classes (" << counts[1] << "/" << counts[2] << "/" << counts[3] << "/" << counts[4] << "), " << checks
    << " characters, " << semistable_hits << " semistable, " << mismatches << " mismatches, " << dt << " s";
  if (!first.empty()) s << "; first mismatch " << first;
  return {mismatches == 0 && counts[1] == 3 && counts[2] == 15 && dt < 60, s.str()};
}

Outcome criterion2() {
  std::ostringstream s;
  bool ok = true;
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    const auto walls = wall_arrangement(n);
    const Box box = Box::standard(n);
    const auto curves = enumerate_curves(n);
    const auto chambers = enumerate_chambers(n, box);
    std::size_t points = 0, disagreements = 0;
    for (const auto& ch : chambers) {
      std::vector<bool> base;
      try {
        base = classify_chamber(ch, walls, box, curves, 0, rng);
      } catch (const Error& e) {
        ok = false;
        s << " n=" << n << " " << e.what();
        continue;
      }
      for (const RatVec& x : sample_interior(ch, walls, box, 5, rng)) {
        ++points;
        if (!strictly_inside(ch, walls, box, x)) ++disagreements;
        for (std::size_t k = 0; k < curves.size(); ++k) {
          const auto v = is_stable(curves[k], x);
          if (v.stable != v.semistable || v.stable != base[k]) ++disagreements;
        }
      }
    }
    s << " n=" << n << ": " << chambers.size() << " chambers, " << points << " interior points, " << disagreements
      << " disagreements;";
    if (disagreements) ok = false;
    if (n == 1 && chambers.size() != 3) ok = false;
    if (n == 2 && chambers.size() != 12) ok = false;
  }
  return {ok, s.str()};
}

Outcome criterion3() {
  std::size_t mismatches = 0, total = 0;
  std::set<std::string> passing2;
  for (int n = 1; n <= 4; ++n) {
    const RatVec chi(n, Rational(2));
    for (const Curve& c : enumerate_curves(n)) {
      ++total;
      const auto v = is_stable(c, chi);
      const bool zu = is_zu_stable(c);
      if (v.semistable != v.stable || v.stable != zu) ++mismatches;
      if (n == 2 && v.semistable) passing2.insert(canonical_form(c));
    }
  }
  std::set<std::string> expected;
  for (const char* j : {R"({"n":2,"core":{"kind":"smooth"},"core_marks":[[1,2]]})",
                        R"({"n":2,"core":{"kind":"ngon","m":1},"core_marks":[[1,2]]})",
                        R"({"n":2,"core":{"kind":"ngon","m":2},"core_marks":[[1],[2]]})",
                        R"({"n":2,"core":{"kind":"fold","m":1},"core_marks":[[1,2]]})"})
    expected.insert(canonical_form(testing::curve(j)));
  std::ostringstream s;
  s << total << " classes, " << mismatches << " mismatches, n=2 passing " << passing2.size() << "/15";
  return {mismatches == 0 && passing2 == expected, s.str()};
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t runs = 0, failing_runs = 0, symbolic_runs = 0, controls = 0, controls_caught = 0;
  std::string first;
  std::mt19937_64 rng(4);
  for (CoreKind kind : {CoreKind::Fold, CoreKind::Ngon}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = m; n <= 4; ++n) {
        for (int tail = 0; tail <= 1 && n - tail >= m; ++tail) {
          const bool symbolic = m <= 2;
          const IdentityRun r = run_identity_suite(kind, m, n, tail, 4000 + 100 * m + 10 * n + tail, 50, symbolic);
          ++runs;
          symbolic_runs += symbolic;
          if (!r.report.all_hold() || !r.constants_ok) {
            ++failing_runs;
            if (first.empty()) {
              first = r.core + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + r.constants_note;
              for (const auto& c : r.report.checks)
                if (!c.holds()) {
                  first += " " + c.tag + ": " + c.witness;
                  break;
                }
            }
          }
          const auto t = realize(numeric_params(random_coordinatized(standard_core_curve(kind, m, n, tail), rng)));
          ++controls;
          if (!verify_identities(mutate_one_value(t)).all_hold()) ++controls_caught;
        }
      }
    }
  }
  std::ostringstream s;
  s << runs << " configurations x 50 draws (" << symbolic_runs << " also symbolic), " << failing_runs
    << " failing; negative controls caught " << controls_caught << "/" << controls << ", " << seconds_since(t0) << " s";
  if (!first.empty()) s << "; first failure " << first;
  return {failing_runs == 0 && controls_caught == controls, s.str()};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  std::size_t checked = 0, mismatches = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    for (const Curve& c : enumerate_curves(n)) {
      if (!coordinate_realizable(c)) continue;
      ++checked;
      const auto vp = vanishing_profile(realize(numeric_params(random_coordinatized(c, rng))));
      const auto om = omega_sets(c);
      if (vp.omega1 != om.omega1 || vp.omega0 != om.omega0_rays) {
        ++mismatches;
        if (first.empty()) first = canonical_form(c);
      }
    }
  }
  std::ostringstream s;
  s << checked << " coordinate-realizable classes, " << mismatches << " mismatches";
  if (!first.empty()) s << "; first " << first;
  return {mismatches == 0 && checked > 0, s.str()};
}

Outcome criterion6() {
  struct Case {
    InclusionMode mode;
    int n;
    Rational a;
  };
  const Case cases[] = {{InclusionMode::NMinus1, 4, Rational(1, 2)},
                        {InclusionMode::NMinus2, 4, Rational(1, 2)},
                        {InclusionMode::NMinus3, 5, Rational(1)}};
  std::ostringstream s;
  bool ok = true;
  for (const auto& c : cases) {
    const InclusionReport r = check_inclusion(c.mode, RatVec(c.n, c.a), c.n, 2);
    s << " " << inclusion_mode_name(c.mode) << " n=" << c.n << " m=" << r.m << ": " << r.classes_checked << " classes, "
      << r.violations.size() << " violations;";
    if (!r.violations.empty() || r.classes_checked == 0) ok = false;
  }
  return {ok, s.str()};
}

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string tail = R"({"anchor":{"kind":"smooth","component":0},"components":[[%]],"joints":[{"base":"anchor","attached":[0]}]})";
  auto tail_with = [&](const std::string& marks) {
    std::string t = tail;
    t.replace(t.find('%'), 1, marks);
    return t;
  };
  const Curve tails = testing::curve(R"({"n":7,"core":{"kind":"smooth"},"core_marks":[[1]],"tails":[)" + tail_with("2,3") +
                                     "," + tail_with("4,5") + "," + tail_with("6,7") + "]}");
  const Curve fold = testing::curve(R"({"n":7,"core":{"kind":"fold","m":3},"core_marks":[[1],[2],[3,4,5,6,7]]})");
  const bool both_stable = is_m_stable(tails, 3) && is_m_stable(fold, 3);
  const ChiWindow pair = uniform_chi_window({tails, fold}, 3);
  const bool pair_ok = pair.lower && pair.upper && *pair.lower == 1 && *pair.upper == Rational(1, 2) && pair.empty();

  const auto all = enumerate_m_stable(7, 3, 2);
  const ChiWindow w = uniform_chi_window(all, 3);
  const bool common = common_chi_exists(all);
  const double dt = seconds_since(t0);
  auto bound = [](const std::optional<Rational>& b) { return b ? to_string(*b) : std::string("inf"); };
  std::ostringstream s;
  s << "pair window [" << bound(pair.lower) << ", " << bound(pair.upper) << "]" << (pair.empty() ? " empty" : "")
    << "; exhaustive over " << all.size() << " 3-stable classes (<=2 unmarked): [" << bound(w.lower) << ", "
    << bound(w.upper) << "]" << (w.empty() ? " empty" : "") << ", non-uniform common chi "
    << (common ? "exists" : "does not exist") << "; " << dt << " s";
  return {both_stable && pair_ok && w.empty() && dt < 300, s.str()};
}

Outcome criterion8() {
  Gen g(8);
  std::mt19937_64 rng(8);
  std::size_t compared = 0, differing = 0;
  std::string first;
  struct Config {
    CoreKind kind;
    int m;
    int tail;
  };
  const Config configs[] = {{CoreKind::Fold, 3, 0}, {CoreKind::Ngon, 3, 0}, {CoreKind::Fold, 2, 2}, {CoreKind::Ngon, 4, 1}};
  for (const auto& cfg : configs) {
    const auto t = realize(numeric_params(random_coordinatized(standard_core_curve(cfg.kind, cfg.m, 7, cfg.tail), rng)));
    const auto base = verify_identities(t).status();
    for (int k = 0; k < 20; ++k) {
      std::vector<Rational> lambda;
      for (int i = 0; i < 7; ++i) lambda.push_back(g.nonzero(-5, 5, 6));
      const auto moved = verify_identities(weight_act(t, lambda)).status();
      ++compared;
      if (moved != base) {
        ++differing;
        if (first.empty()) first = "lambda " + to_string(lambda);
      }
    }
    for (const auto& [tag, holds] : base)
      if (!holds) {
        ++differing;
        if (first.empty()) first = "base report fails " + tag;
      }
  }
  std::ostringstream s;
  s << compared << " weight actions on n=7 tables, " << differing << " report differences";
  if (!first.empty()) s << "; first " << first;
  return {differing == 0, s.str()};
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (int k = 0; k < 8; ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", k + 1, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
