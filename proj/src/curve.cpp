#include <algorithm>
#include <set>
#include <string>

#include "git1/curve.hpp"
#include "git1/errors.hpp"

namespace git1 {

namespace {

std::string where(int tail, int comp) {
  return "tail " + std::to_string(tail) + " component " + std::to_string(comp);
}

void check_tail_shape(const Tail& t, int ti) {
  const int nc = static_cast<int>(t.components.size());
  if (nc == 0) throw Error(ErrorKind::MalformedTail, "tail " + std::to_string(ti) + " has no components");
  std::vector<int> seen(nc, 0);
  int anchor_joints = 0;
  for (const Joint& j : t.joints) {
    if (j.base == kAnchorBase) {
      ++anchor_joints;
    } else if (j.base < 0 || j.base >= nc) {
      throw Error(ErrorKind::MalformedTail, "tail " + std::to_string(ti) + " joint base out of range");
    }
    if (j.attached.empty())
      throw Error(ErrorKind::MalformedTail, "tail " + std::to_string(ti) + " joint attaches nothing");
    for (int a : j.attached) {
      if (a < 0 || a >= nc)
        throw Error(ErrorKind::MalformedTail, "tail " + std::to_string(ti) + " attaches unknown component");
      ++seen[a];
    }
  }
  if (anchor_joints != 1)
    throw Error(ErrorKind::MalformedTail, "tail " + std::to_string(ti) + " must have exactly one anchor joint");
  for (int c = 0; c < nc; ++c)
    if (seen[c] != 1)
      throw Error(ErrorKind::MalformedTail, where(ti, c) + " must be attached exactly once");
  // Every component must be reachable from the anchor, otherwise there is a cycle.
  std::vector<char> reached(nc, 0);
  std::vector<int> frontier;
  for (const Joint& j : t.joints)
    if (j.base == kAnchorBase)
      for (int a : j.attached) frontier.push_back(a);
  while (!frontier.empty()) {
    int c = frontier.back();
    frontier.pop_back();
    if (reached[c]) continue;
    reached[c] = 1;
    for (const Joint& j : t.joints)
      if (j.base == c)
        for (int a : j.attached) frontier.push_back(a);
  }
  for (int c = 0; c < nc; ++c)
    if (!reached[c]) throw Error(ErrorKind::MalformedTail, where(ti, c) + " is not connected to the anchor");
}

const Joint& anchor_joint(const Tail& t) {
  for (const Joint& j : t.joints)
    if (j.base == kAnchorBase) return j;
  throw Error(ErrorKind::MalformedTail, "tail without anchor joint");
}

}  // namespace

int tail_parent(const Tail& t, int comp) {
  for (const Joint& j : t.joints)
    if (std::find(j.attached.begin(), j.attached.end(), comp) != j.attached.end()) return j.base;
  throw Error(ErrorKind::MalformedTail, "component not attached");
}

int tail_child_points(const Tail& t, int comp) {
  int k = 0;
  for (const Joint& j : t.joints)
    if (j.base == comp) ++k;
  return k;
}

int total_components(const Curve& c) {
  int k = c.core.component_count();
  for (const Tail& t : c.tails) k += static_cast<int>(t.components.size());
  return k;
}

int unmarked_component_count(const Curve& c) {
  int k = 0;
  for (const auto& m : c.core_marks)
    if (m.empty()) ++k;
  for (const Tail& t : c.tails)
    for (const auto& m : t.components)
      if (m.empty()) ++k;
  return k;
}

Curve validate_curve(Curve c, bool allow_unmarked) {
  c.allow_unmarked = allow_unmarked;
  if (c.n < 1) throw Error(ErrorKind::Parse, "n must be at least 1");
  if (c.core.kind == CoreKind::Smooth) {
    c.core.m = 1;
  } else if (c.core.m < 1) {
    throw Error(ErrorKind::Parse, "core m must be at least 1");
  }
  const int m = c.core.component_count();
  if (static_cast<int>(c.core_marks.size()) != m)
    throw Error(ErrorKind::Parse, "core_marks must list " + std::to_string(m) + " components");

  std::vector<int> used(c.n + 1, 0);
  auto take = [&](std::vector<int>& marks) {
    std::sort(marks.begin(), marks.end());
    for (int p : marks) {
      if (p < 1 || p > c.n) throw Error(ErrorKind::Parse, "mark " + std::to_string(p) + " outside [1,n]");
      if (used[p]++) throw Error(ErrorKind::DuplicateMark, "mark " + std::to_string(p) + " appears twice");
    }
  };
  for (auto& marks : c.core_marks) take(marks);
  for (std::size_t ti = 0; ti < c.tails.size(); ++ti) {
    Tail& t = c.tails[ti];
    check_tail_shape(t, static_cast<int>(ti));
    for (auto& marks : t.components) take(marks);
    for (Joint& j : t.joints) std::sort(j.attached.begin(), j.attached.end());
  }
  if (!allow_unmarked) {
    for (int p = 1; p <= c.n; ++p)
      if (!used[p]) throw Error(ErrorKind::MissingMark, "mark " + std::to_string(p) + " is not placed");
    for (int k = 0; k < m; ++k)
      if (c.core_marks[k].empty())
        throw Error(ErrorKind::UnmarkedComponent, "core component " + std::to_string(k) + " has no mark");
    for (std::size_t ti = 0; ti < c.tails.size(); ++ti)
      for (std::size_t ci = 0; ci < c.tails[ti].components.size(); ++ci)
        if (c.tails[ti].components[ci].empty())
          throw Error(ErrorKind::UnmarkedComponent, where(static_cast<int>(ti), static_cast<int>(ci)) + " has no mark");
  }

  // Anchors.
  std::set<std::pair<int, int>> singular_anchors;
  int q_branches = 0;
  for (std::size_t ti = 0; ti < c.tails.size(); ++ti) {
    const Tail& t = c.tails[ti];
    const Anchor& a = t.anchor;
    const int k = static_cast<int>(anchor_joint(t).attached.size());
    switch (a.kind) {
      case AnchorKind::SmoothPoint:
        if (a.component < 0 || a.component >= m)
          throw Error(ErrorKind::BadAnchor, "smooth anchor on missing core component");
        if (k + 1 > c.n + 1)
          throw Error(ErrorKind::SingularityBoundExceeded, "rational " + std::to_string(k + 1) + "-fold point");
        break;
      case AnchorKind::CoreSingular:
        if (c.core.kind != CoreKind::Fold)
          throw Error(ErrorKind::BadAnchor, "singular-point anchor needs an elliptic m-fold core");
        if (!singular_anchors.insert({0, -1}).second)
          throw Error(ErrorKind::AnchorClash, "two tails at the singular point");
        q_branches = k;
        break;
      case AnchorKind::Node:
        if (c.core.kind != CoreKind::Ngon)
          throw Error(ErrorKind::BadAnchor, "node anchor needs an m-gon core");
        if (a.component < 0 || a.component >= m)
          throw Error(ErrorKind::BadAnchor, "node index out of range");
        if (!singular_anchors.insert({1, a.component}).second)
          throw Error(ErrorKind::AnchorClash, "two tails at node " + std::to_string(a.component));
        if (k + 2 > c.n + 1)
          throw Error(ErrorKind::SingularityBoundExceeded, "rational " + std::to_string(k + 2) + "-fold point");
        break;
    }
    for (const Joint& j : t.joints)
      if (j.base != kAnchorBase && static_cast<int>(j.attached.size()) + 1 > c.n + 1)
        throw Error(ErrorKind::SingularityBoundExceeded,
                    "rational " + std::to_string(j.attached.size() + 1) + "-fold point");
  }
  if (c.core.kind == CoreKind::Fold) {
    if (q_branches == 0 && c.core.m > c.n)
      throw Error(ErrorKind::SingularityBoundExceeded, "elliptic " + std::to_string(c.core.m) + "-fold point");
    if (q_branches > 0 && c.core.m + q_branches > c.n)
      throw Error(ErrorKind::SingularityBoundExceeded,
                  "elliptic " + std::to_string(c.core.m) + "-fold point with " + std::to_string(q_branches) +
                      " rational branches");
  }
  return c;
}

std::vector<SpecialPoints> special_point_counts(const Curve& c) {
  std::vector<SpecialPoints> out;
  const int m = c.core.component_count();
  std::vector<int> smooth_anchors(m, 0);
  for (const Tail& t : c.tails)
    if (t.anchor.kind == AnchorKind::SmoothPoint) ++smooth_anchors[t.anchor.component];
  for (int k = 0; k < m; ++k) {
    SpecialPoints s;
    s.where = {true, -1, k};
    s.marks = static_cast<int>(c.core_marks[k].size());
    int sing = 0, branches = 0;
    switch (c.core.kind) {
      case CoreKind::Smooth: break;
      case CoreKind::Fold: sing = 1; branches = 1; break;
      case CoreKind::Ngon:
        if (c.core.m == 1) {
          sing = 1;
          branches = 2;
        } else {
          sing = 2;
          branches = 2;
        }
        break;
    }
    s.on_component = s.marks + sing + smooth_anchors[k];
    s.on_normalization = s.marks + branches + smooth_anchors[k];
    out.push_back(s);
  }
  for (std::size_t ti = 0; ti < c.tails.size(); ++ti) {
    const Tail& t = c.tails[ti];
    for (std::size_t ci = 0; ci < t.components.size(); ++ci) {
      SpecialPoints s;
      s.where = {false, static_cast<int>(ti), static_cast<int>(ci)};
      s.marks = static_cast<int>(t.components[ci].size());
      s.on_component = s.marks + 1 + tail_child_points(t, static_cast<int>(ci));
      s.on_normalization = s.on_component;
      out.push_back(s);
    }
  }
  return out;
}

IndexSets stability_index_sets(const Curve& c) {
  IndexSets ix;
  auto sp = special_point_counts(c);
  for (const SpecialPoints& s : sp) {
    const std::vector<int>& marks =
        s.where.core ? c.core_marks[s.where.index] : c.tails[s.where.tail].components[s.where.index];
    for (int p : marks) {
      if (s.where.core) {
        ix.I.push_back(p);
        if (c.core.kind == CoreKind::Fold && s.on_component == 2) ix.I0.push_back(p);
      } else if (s.on_component >= 3) {
        ix.J.push_back(p);
      }
    }
  }
  std::sort(ix.I.begin(), ix.I.end());
  std::sort(ix.J.begin(), ix.J.end());
  std::sort(ix.I0.begin(), ix.I0.end());
  return ix;
}

std::string core_label(const Core& core) {
  switch (core.kind) {
    case CoreKind::Smooth: return "Smooth";
    case CoreKind::Ngon: return "Ngon(" + std::to_string(core.m) + ")";
    case CoreKind::Fold: return "Fold(" + std::to_string(core.m) + ")";
  }
  return "?";
}

}  // namespace git1
