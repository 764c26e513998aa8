#include "git1/git1.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "git1/chambers.hpp"
#include "git1/errors.hpp"
#include "git1/function_field.hpp"
#include "git1/json_io.hpp"
#include "git1/smyth.hpp"
#include "git1/stability.hpp"

struct git1_curve {
  git1::Curve curve;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

git1_status fail(git1_status s, const std::string& kind, const std::string& msg) {
  last_kind = kind;
  last_error = msg;
  return s;
}

git1_status status_for(git1::ErrorKind k) {
  using git1::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return GIT1_ERR_PARSE;
    case ErrorKind::BudgetExceeded: return GIT1_ERR_BUDGET;
    default: return git1::is_input_error(k) ? GIT1_ERR_VALIDATION : GIT1_ERR_MATH;
  }
}

template <class F>
git1_status guarded(F&& body) {
  last_error.clear();
  last_kind.clear();
  try {
    body();
    return GIT1_OK;
  } catch (const git1::Error& e) {
    return fail(status_for(e.kind()), git1::error_kind_name(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GIT1_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return fail(GIT1_ERR_INTERNAL, "Internal", e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string dump(const git1::Json& j) { return j.dump(2) + "\n"; }

git1::RatVec parse_chi(const char* chi) {
  std::string s(chi);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (s[first] == '[' || s[first] == '{')) return git1::chi_from_json(git1::parse_json(s));
  return git1::parse_rational_list(s);
}

}  // namespace

#define GIT1_REQUIRE(cond)                                                        \
  do {                                                                            \
    if (!(cond)) return fail(GIT1_ERR_ARGUMENT, "Argument", "invalid argument: " #cond); \
  } while (0)

extern "C" {

const char* git1_last_error(void) { return last_error.c_str(); }
const char* git1_last_error_kind(void) { return last_kind.c_str(); }
const char* git1_version(void) { return "1.0.0"; }

void git1_free_string(char* s) { std::free(s); }

git1_status git1_curve_from_json(const char* json, int allow_unmarked, git1_curve** out) {
  GIT1_REQUIRE(json && out);
  *out = nullptr;
  return guarded([&] {
    auto* c = new git1_curve{git1::curve_from_json(git1::parse_json(json), allow_unmarked != 0)};
    *out = c;
  });
}

void git1_curve_free(git1_curve* c) { delete c; }

git1_status git1_curve_to_json(const git1_curve* c, char** out) {
  GIT1_REQUIRE(c && out);
  return guarded([&] {
    git1::Json j = git1::curve_to_json(c->curve);
    j["canonical"] = git1::canonical_form(c->curve);
    *out = dup(dump(j));
  });
}

git1_status git1_curve_canonical_form(const git1_curve* c, char** out) {
  GIT1_REQUIRE(c && out);
  return guarded([&] { *out = dup(git1::canonical_form(c->curve)); });
}

git1_status git1_stability(const git1_curve* c, const char* chi, char** out_json) {
  GIT1_REQUIRE(c && chi && out_json);
  return guarded([&] {
    git1::RatVec x = parse_chi(chi);
    git1::StabilityVerdict v = git1::is_stable(c->curve, x);
    *out_json = dup(dump(git1::verdict_to_json(v, x)));
  });
}

git1_status git1_polytope(const git1_curve* c, char** out_json) {
  GIT1_REQUIRE(c && out_json);
  return guarded([&] {
    *out_json = dup(dump(git1::polytope_to_json(git1::semistability_polytope(c->curve), git1::omega_sets(c->curve))));
  });
}

git1_status git1_is_m_stable(const git1_curve* c, int m, int* out) {
  GIT1_REQUIRE(c && out);
  return guarded([&] { *out = git1::is_m_stable(c->curve, m) ? 1 : 0; });
}

git1_status git1_is_zu_stable(const git1_curve* c, int* out) {
  GIT1_REQUIRE(c && out);
  return guarded([&] { *out = git1::is_zu_stable(c->curve) ? 1 : 0; });
}

git1_status git1_contract(const git1_curve* c, char** out_json) {
  GIT1_REQUIRE(c && out_json);
  return guarded([&] { *out_json = dup(dump(git1::curve_to_json(git1::contract_unmarked(c->curve)))); });
}

git1_status git1_enumerate(int n, int allow_unmarked, int max_unmarked, char** out_json) {
  GIT1_REQUIRE(n >= 1 && out_json && max_unmarked >= 0);
  return guarded([&] {
    git1::EnumOptions opts;
    opts.allow_unmarked = allow_unmarked != 0;
    opts.max_unmarked = allow_unmarked ? max_unmarked : 0;
    git1::Json arr = git1::Json::array();
    for (const auto& c : git1::enumerate_curves(n, opts)) {
      git1::Json j = git1::curve_to_json(c);
      j["canonical"] = git1::canonical_form(c);
      arr.push_back(j);
    }
    *out_json = dup(dump(arr));
  });
}

git1_status git1_chambers(int n, int tsv, char** out) {
  GIT1_REQUIRE(n >= 1 && out);
  return guarded([&] {
    auto walls = git1::wall_arrangement(n);
    auto chambers = git1::enumerate_chambers(n);
    if (tsv) {
      *out = dup(git1::chambers_tsv(walls, chambers));
      return;
    }
    git1::Json j;
    j["n"] = n;
    git1::Json wl = git1::Json::array();
    for (const auto& w : walls) wl.push_back(w.label());
    j["walls"] = wl;
    git1::Json cl = git1::Json::array();
    for (std::size_t k = 0; k < chambers.size(); ++k)
      cl.push_back({{"id", k}, {"signs", chambers[k].sign_string()}, {"witness", git1::rational_array(chambers[k].witness)}});
    j["chambers"] = cl;
    *out = dup(dump(j));
  });
}

git1_status git1_classify(int n, uint64_t seed, int tsv, char** out) {
  GIT1_REQUIRE(n >= 1 && out);
  return guarded([&] {
    git1::AtlasReport r = git1::atlas_report(n, seed);
    *out = dup(tsv ? git1::atlas_tsv(r) : dump(git1::atlas_to_json(r)));
  });
}

git1_status git1_smyth(const char* mode, const char* chi, int n, int max_unmarked, char** out_json, int* violations) {
  GIT1_REQUIRE(mode && chi && out_json && violations && n >= 1 && max_unmarked >= 0);
  auto parsed = git1::parse_inclusion_mode(mode);
  if (!parsed) return fail(GIT1_ERR_ARGUMENT, "Argument", std::string("unknown inclusion mode: ") + mode);
  return guarded([&] {
    git1::InclusionReport r = git1::check_inclusion(*parsed, parse_chi(chi), n, max_unmarked);
    *violations = static_cast<int>(r.violations.size());
    *out_json = dup(dump(git1::inclusion_to_json(r)));
  });
}

git1_status git1_window(const char* curves_json, int m, char** out_json, int* empty) {
  GIT1_REQUIRE(curves_json && out_json && empty && m >= 1);
  return guarded([&] {
    git1::Json arr = git1::parse_json(curves_json);
    if (!arr.is_array()) throw git1::Error(git1::ErrorKind::Parse, "expected a JSON array of curves");
    std::vector<git1::Curve> curves;
    for (const auto& j : arr) curves.push_back(git1::curve_from_json(j, true));
    git1::ChiWindow w = git1::uniform_chi_window(curves, m);
    git1::Json j = git1::window_to_json(w, git1::common_chi_exists(curves));
    j["m"] = m;
    j["curves"] = curves.size();
    *empty = w.empty() ? 1 : 0;
    *out_json = dup(dump(j));
  });
}

git1_status git1_window_exhaustive(int n, int m, int max_unmarked, char** out_json, int* empty) {
  GIT1_REQUIRE(out_json && empty && n >= 1 && m >= 1 && max_unmarked >= 0);
  return guarded([&] {
    std::vector<git1::Curve> curves = git1::enumerate_m_stable(n, m, max_unmarked);
    git1::ChiWindow w = git1::uniform_chi_window(curves, m);
    git1::Json j = git1::window_to_json(w, git1::common_chi_exists(curves));
    j["n"] = n;
    j["m"] = m;
    j["max_unmarked"] = max_unmarked;
    j["curves"] = curves.size();
    *empty = w.empty() ? 1 : 0;
    *out_json = dup(dump(j));
  });
}

git1_status git1_verify_identities(const char* core, int m, int n, int tail_marks, uint64_t seed, int draws,
                                   int symbolic, char** out_json, int* all_hold) {
  GIT1_REQUIRE(core && out_json && all_hold && draws >= 0);
  const std::string k(core);
  if (k != "fold" && k != "ngon") return fail(GIT1_ERR_ARGUMENT, "Argument", "core must be \"fold\" or \"ngon\"");
  return guarded([&] {
    git1::IdentityRun r = git1::run_identity_suite(k == "fold" ? git1::CoreKind::Fold : git1::CoreKind::Ngon, m, n,
                                                   tail_marks, seed, draws, symbolic != 0);
    *all_hold = r.report.all_hold() && r.constants_ok ? 1 : 0;
    *out_json = dup(dump(git1::identity_run_to_json(r)));
  });
}

git1_status git1_verify_coordinatized(const char* json, char** out_json, int* all_hold) {
  GIT1_REQUIRE(json && out_json && all_hold);
  return guarded([&] {
    git1::CoordinatizedCurve cc = git1::coordinatized_from_json(git1::parse_json(json));
    git1::Params<git1::Rational> p = git1::numeric_params(cc);
    git1::Table<git1::Rational> t = git1::realize(p);
    git1::IdentityReport r = git1::realization_checks(p, t);
    r.merge(git1::verify_identities(t));
    git1::Json j;
    j["curve"] = git1::coordinatized_to_json(cc);
    j["all_hold"] = r.all_hold();
    git1::Json ids;
    for (const auto& c : r.checks) {
      git1::Json e = {{"holds", c.holds()}, {"instances", c.instances}, {"failures", c.failures}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      ids[c.tag] = e;
    }
    j["identities"] = ids;
    *all_hold = r.all_hold() ? 1 : 0;
    *out_json = dup(dump(j));
  });
}

}  // extern "C"
