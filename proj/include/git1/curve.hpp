#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace git1 {

enum class CoreKind { Smooth, Ngon, Fold };

struct Core {
  CoreKind kind = CoreKind::Smooth;
  int m = 1;  // ignored for Smooth

  int component_count() const { return kind == CoreKind::Smooth ? 1 : m; }
  bool operator==(const Core&) const = default;
};

enum class AnchorKind { SmoothPoint, CoreSingular, Node };

// For SmoothPoint, `component` is the core component carrying the point.
// For Node, the node joins core components `component` and `component + 1 (mod m)`.
struct Anchor {
  AnchorKind kind = AnchorKind::SmoothPoint;
  int component = 0;
  bool operator==(const Anchor&) const = default;
};

inline constexpr int kAnchorBase = -1;

// A point on `base` (a tail component index, or the anchor) where the
// `attached` components meet it.
struct Joint {
  int base = kAnchorBase;
  std::vector<int> attached;
};

struct Tail {
  Anchor anchor;
  std::vector<std::vector<int>> components;  // marks per tail component
  std::vector<Joint> joints;
};

struct Curve {
  int n = 0;
  Core core;
  std::vector<std::vector<int>> core_marks;  // one entry per core component
  std::vector<Tail> tails;
  bool allow_unmarked = false;
};

struct ComponentRef {
  bool core = true;
  int tail = -1;  // tail index when !core
  int index = 0;  // core component index, or component index inside the tail
  bool operator==(const ComponentRef&) const = default;
};

struct SpecialPoints {
  ComponentRef where;
  int marks = 0;
  int on_component = 0;
  int on_normalization = 0;
};

struct IndexSets {
  std::vector<int> I;
  std::vector<int> J;
  std::vector<int> I0;
};

// Checks every structural invariant and returns a normalized copy
// (marks sorted, joint lists sorted). Throws git1::Error.
Curve validate_curve(Curve raw, bool allow_unmarked = false);

// Core components first (in order), then tail components tail by tail.
std::vector<SpecialPoints> special_point_counts(const Curve& c);

IndexSets stability_index_sets(const Curve& c);

// Marks on tail component `comp` of tail `t` together with its parent:
// returns the parent tail component index, or kAnchorBase.
int tail_parent(const Tail& t, int comp);

// Number of joints on tail component `comp` (points where children attach).
int tail_child_points(const Tail& t, int comp);

int total_components(const Curve& c);
int unmarked_component_count(const Curve& c);

std::string canonical_form(const Curve& c);

std::string core_label(const Core& core);

struct EnumOptions {
  bool allow_unmarked = false;
  int max_unmarked = 0;          // only used with allow_unmarked
  int max_core_m = -1;           // -1 means n
  int max_tail_components = -1;  // -1 means n
  bool nodal_smooth_tails = false;  // joints binary, anchors at smooth points only
  int min_tail_special = 0;         // prune tail components with fewer special points
  std::uint64_t budget = 0;         // 0 means GIT1_BUDGET or the built-in default
};

std::uint64_t default_budget();

// Isomorphism classes in canonical order (sorted by canonical form).
std::vector<Curve> enumerate_curves(int n, const EnumOptions& opts = {});

}  // namespace git1
