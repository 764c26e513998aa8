#include "git1/json_io.hpp"

#include "git1/errors.hpp"

namespace git1 {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& v : j) out.push_back(int_list(v, what));
  return out;
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rationals must be \"p/q\" strings or integers");
}

std::map<int, Rational> mark_map(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must map marks to rationals");
  std::map<int, Rational> out;
  for (const auto& [k, v] : j.items()) {
    int mark = 0;
    try {
      std::size_t used = 0;
      mark = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad(std::string(what) + " key \"" + k + "\" is not a mark");
    }
    out[mark] = as_rational(v);
  }
  return out;
}

const char* core_kind_name(CoreKind k) {
  switch (k) {
    case CoreKind::Smooth: return "smooth";
    case CoreKind::Ngon: return "ngon";
    case CoreKind::Fold: return "fold";
  }
  return "smooth";
}

const char* anchor_kind_name(AnchorKind k) {
  switch (k) {
    case AnchorKind::SmoothPoint: return "smooth";
    case AnchorKind::CoreSingular: return "singular";
    case AnchorKind::Node: return "node";
  }
  return "smooth";
}

Json curve_fields(const Curve& c) {
  Json j;
  j["n"] = c.n;
  Json core;
  core["kind"] = core_kind_name(c.core.kind);
  if (c.core.kind != CoreKind::Smooth) core["m"] = c.core.m;
  j["core"] = core;
  j["core_marks"] = c.core_marks;
  Json tails = Json::array();
  for (const Tail& t : c.tails) {
    Json tj;
    Json anchor;
    anchor["kind"] = anchor_kind_name(t.anchor.kind);
    if (t.anchor.kind != AnchorKind::CoreSingular) anchor["component"] = t.anchor.component;
    tj["anchor"] = anchor;
    tj["components"] = t.components;
    Json joints = Json::array();
    for (const Joint& jt : t.joints) {
      Json x;
      if (jt.base == kAnchorBase) {
        x["base"] = "anchor";
      } else {
        x["base"] = jt.base;
      }
      x["attached"] = jt.attached;
      joints.push_back(x);
    }
    tj["joints"] = joints;
    tails.push_back(tj);
  }
  j["tails"] = tails;
  if (c.allow_unmarked) j["allow_unmarked"] = true;
  return j;
}

Curve raw_curve(const Json& j) {
  Curve c;
  c.n = as_int(field(j, "n"), "n");
  const Json& core = field(j, "core");
  const std::string kind = field(core, "kind").is_string() ? core.at("kind").get<std::string>() : "";
  if (kind == "smooth") {
    c.core = {CoreKind::Smooth, 1};
  } else if (kind == "ngon" || kind == "fold") {
    c.core = {kind == "ngon" ? CoreKind::Ngon : CoreKind::Fold, as_int(field(core, "m"), "core.m")};
  } else {
    bad("core.kind must be \"smooth\", \"ngon\" or \"fold\"");
  }
  c.core_marks = int_lists(field(j, "core_marks"), "core_marks");
  if (j.contains("tails")) {
    const Json& tails = j.at("tails");
    if (!tails.is_array()) bad("tails must be an array");
    for (const Json& tj : tails) {
      Tail t;
      const Json& anchor = field(tj, "anchor");
      const std::string ak = field(anchor, "kind").is_string() ? anchor.at("kind").get<std::string>() : "";
      if (ak == "smooth") {
        t.anchor = {AnchorKind::SmoothPoint, as_int(field(anchor, "component"), "anchor.component")};
      } else if (ak == "singular") {
        t.anchor = {AnchorKind::CoreSingular, 0};
      } else if (ak == "node") {
        t.anchor = {AnchorKind::Node, as_int(field(anchor, "component"), "anchor.component")};
      } else {
        bad("anchor.kind must be \"smooth\", \"singular\" or \"node\"");
      }
      t.components = int_lists(field(tj, "components"), "tail components");
      const Json& joints = field(tj, "joints");
      if (!joints.is_array()) bad("joints must be an array");
      for (const Json& jj : joints) {
        Joint jt;
        const Json& base = field(jj, "base");
        if (base.is_string() && base.get<std::string>() == "anchor") {
          jt.base = kAnchorBase;
        } else {
          jt.base = as_int(base, "joint base");
        }
        jt.attached = int_list(field(jj, "attached"), "joint attached");
        t.joints.push_back(jt);
      }
      c.tails.push_back(t);
    }
  }
  return c;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Curve curve_from_json(const Json& j, bool allow_unmarked) {
  const bool flag = j.is_object() && j.contains("allow_unmarked") && j.at("allow_unmarked").is_boolean() &&
                    j.at("allow_unmarked").get<bool>();
  return validate_curve(raw_curve(j), allow_unmarked || flag);
}

Json curve_to_json(const Curve& c) { return curve_fields(c); }

RatVec chi_from_json(const Json& j) {
  if (j.is_string()) return parse_rational_list(j.get<std::string>());
  const Json& arr = j.is_object() ? field(j, "a") : j;
  if (!arr.is_array()) bad("character must be {\"a\": [...]} or an array");
  RatVec out;
  for (const auto& v : arr) out.push_back(as_rational(v));
  return out;
}

Json rational_array(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

CoordinatizedCurve coordinatized_from_json(const Json& j) {
  CoordinatizedCurve cc;
  cc.base = curve_from_json(j);
  cc.positions = mark_map(field(j, "positions"), "positions");
  cc.scalings = mark_map(field(j, "scalings"), "scalings");
  if (j.contains("anchor_positions")) {
    const Json& ap = j.at("anchor_positions");
    if (!ap.is_array()) bad("anchor_positions must be an array");
    for (const auto& v : ap) cc.anchor_positions.push_back(as_rational(v));
  }
  validate_coordinatized(cc);
  return cc;
}

Json coordinatized_to_json(const CoordinatizedCurve& cc) {
  Json j = curve_fields(cc.base);
  Json pos, sc;
  for (const auto& [k, v] : cc.positions) pos[std::to_string(k)] = to_string(v);
  for (const auto& [k, v] : cc.scalings) sc[std::to_string(k)] = to_string(v);
  j["positions"] = pos;
  j["scalings"] = sc;
  if (!cc.anchor_positions.empty()) j["anchor_positions"] = rational_array(cc.anchor_positions);
  return j;
}

Json verdict_to_json(const StabilityVerdict& v, const RatVec& chi) {
  Json j;
  j["chi"] = rational_array(chi);
  j["semistable"] = v.semistable;
  j["stable"] = v.stable;
  j["finite_reduced_stabilizer"] = v.finite_reduced_stabilizer;
  j["index_sets"] = {{"I", v.index_sets.I}, {"J", v.index_sets.J}, {"I0", v.index_sets.I0}};
  j["violations"] = v.violations;
  j["strict_violations"] = v.strict_violations;
  j["tight"] = v.tight;
  return j;
}

Json polytope_to_json(const HPolytope& p, const OmegaSets& omega) {
  Json j;
  j["n"] = p.n;
  Json cons = Json::array();
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const auto& c = p.constraints[k];
    const char* rel = c.rel == lp::Relation::LE ? "<=" : c.rel == lp::Relation::GE ? ">=" : "=";
    cons.push_back({{"name", k < p.names.size() ? p.names[k] : ""},
                    {"coeffs", rational_array(c.coeffs)},
                    {"relation", rel},
                    {"rhs", to_string(c.rhs)}});
  }
  j["constraints"] = cons;
  j["omega1"] = omega.omega1;
  j["omega0_rays"] = omega.omega0_rays;
  return j;
}

Json inclusion_to_json(const InclusionReport& r) {
  Json j;
  j["mode"] = inclusion_mode_name(r.mode);
  j["n"] = r.n;
  j["m"] = r.m;
  j["chi"] = rational_array(r.chi);
  j["classes_checked"] = r.classes_checked;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"source", x.source}, {"image", x.image}, {"failed", x.failed}});
  j["violations"] = v;
  return j;
}

Json window_to_json(const ChiWindow& w, bool common_chi) {
  Json j;
  j["lower"] = w.lower ? Json(to_string(*w.lower)) : Json(nullptr);
  j["upper"] = w.upper ? Json(to_string(*w.upper)) : Json(nullptr);
  j["empty"] = w.empty();
  j["common_chi_exists"] = common_chi;
  return j;
}

Json atlas_to_json(const AtlasReport& r) {
  Json j;
  j["n"] = r.n;
  Json walls = Json::array();
  for (const auto& w : r.walls) walls.push_back(w.label());
  j["walls"] = walls;
  j["classes"] = r.classes;
  Json chambers = Json::array();
  for (std::size_t c = 0; c < r.chambers.size(); ++c) {
    Json stable = Json::array();
    for (std::size_t k = 0; k < r.curves.size(); ++k)
      if (r.stable[c][k]) stable.push_back(r.classes[k]);
    chambers.push_back({{"id", c},
                        {"signs", r.chambers[c].sign_string()},
                        {"witness", rational_array(r.chambers[c].witness)},
                        {"stable", stable}});
  }
  j["chambers"] = chambers;
  Json flips = Json::array();
  for (const auto& f : r.flips) {
    Json entered = Json::array(), left = Json::array();
    for (int k : f.entered) entered.push_back(r.classes[k]);
    for (int k : f.left) left.push_back(r.classes[k]);
    flips.push_back({{"wall", r.walls[f.wall].label()},
                     {"below", f.below},
                     {"above", f.above},
                     {"entered", entered},
                     {"left", left}});
  }
  j["flips"] = flips;
  return j;
}

Json identity_run_to_json(const IdentityRun& r) {
  Json j;
  j["core"] = r.core;
  j["m"] = r.m;
  j["n"] = r.n;
  j["tail_marks"] = r.tail_marks;
  j["draws"] = r.draws;
  j["symbolic"] = r.symbolic;
  j["all_hold"] = r.report.all_hold() && r.constants_ok;
  j["constants_ok"] = r.constants_ok;
  if (!r.constants_note.empty()) j["constants_note"] = r.constants_note;
  Json ids;
  for (const auto& c : r.report.checks) {
    Json e = {{"holds", c.holds()}, {"instances", c.instances}, {"failures", c.failures}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    ids[c.tag] = e;
  }
  j["identities"] = ids;
  return j;
}

}  // namespace git1
