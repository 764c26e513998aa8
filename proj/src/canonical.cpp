#include <algorithm>
#include <functional>

#include "git1/curve.hpp"
#include "tree.hpp"

namespace git1 {

namespace detail {

TTail tail_to_tree(const Tail& t) {
  std::function<TNode(int)> build = [&](int c) {
    TNode n;
    n.marks = t.components[c];
    std::sort(n.marks.begin(), n.marks.end());
    for (const Joint& j : t.joints) {
      if (j.base != c) continue;
      std::vector<TNode> group;
      for (int a : j.attached) group.push_back(build(a));
      n.joints.push_back(std::move(group));
    }
    return n;
  };
  TTail out;
  out.anchor = t.anchor;
  for (const Joint& j : t.joints)
    if (j.base == kAnchorBase)
      for (int a : j.attached) out.top.push_back(build(a));
  return out;
}

Tail tree_to_tail(const TTail& tt) {
  Tail t;
  t.anchor = tt.anchor;
  std::function<int(const TNode&)> emit = [&](const TNode& n) {
    int id = static_cast<int>(t.components.size());
    t.components.push_back(n.marks);
    for (const auto& group : n.joints) {
      Joint j;
      j.base = id;
      for (const TNode& child : group) j.attached.push_back(emit(child));
      t.joints.push_back(std::move(j));
    }
    return id;
  };
  Joint top;
  top.base = kAnchorBase;
  for (const TNode& n : tt.top) top.attached.push_back(emit(n));
  t.joints.insert(t.joints.begin(), std::move(top));
  return t;
}

std::string marks_canon(const std::vector<int>& marks) {
  std::vector<int> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  std::string s = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sorted[i]);
  }
  return s + "}";
}

std::string group_canon(const std::vector<TNode>& group) {
  std::vector<std::string> parts;
  for (const TNode& n : group) parts.push_back(node_canon(n));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "|";
    s += parts[i];
  }
  return s;
}

std::string node_canon(const TNode& n) {
  std::vector<std::string> joints;
  for (const auto& g : n.joints) joints.push_back("[" + group_canon(g) + "]");
  std::sort(joints.begin(), joints.end());
  std::string s = marks_canon(n.marks);
  for (const auto& j : joints) s += j;
  return s;
}

int node_component_count(const TNode& n) {
  int k = 1;
  for (const auto& g : n.joints)
    for (const TNode& c : g) k += node_component_count(c);
  return k;
}

int node_unmarked_count(const TNode& n) {
  int k = n.marks.empty() ? 1 : 0;
  for (const auto& g : n.joints)
    for (const TNode& c : g) k += node_unmarked_count(c);
  return k;
}

}  // namespace detail

std::string canonical_form(const Curve& c) {
  using namespace detail;
  const int m = c.core.component_count();
  std::vector<std::vector<std::string>> smooth_tails(m);
  std::string q_tail;
  std::vector<std::string> node_tail(m);
  for (const Tail& t : c.tails) {
    std::string body = "<" + group_canon(tail_to_tree(t).top) + ">";
    switch (t.anchor.kind) {
      case AnchorKind::SmoothPoint: smooth_tails[t.anchor.component].push_back(body); break;
      case AnchorKind::CoreSingular: q_tail = body; break;
      case AnchorKind::Node: node_tail[t.anchor.component] = body; break;
    }
  }
  std::vector<std::string> sig(m);
  for (int k = 0; k < m; ++k) {
    std::sort(smooth_tails[k].begin(), smooth_tails[k].end());
    sig[k] = marks_canon(c.core_marks[k]);
    for (const auto& s : smooth_tails[k]) sig[k] += s;
  }
  switch (c.core.kind) {
    case CoreKind::Smooth: return "S:" + sig[0];
    case CoreKind::Fold: {
      std::sort(sig.begin(), sig.end());
      std::string s = "F" + std::to_string(m) + ":";
      for (int k = 0; k < m; ++k) {
        if (k) s += ";";
        s += sig[k];
      }
      if (!q_tail.empty()) s += "@q" + q_tail;
      return s;
    }
    case CoreKind::Ngon: {
      std::string best;
      for (int refl = 0; refl < 2; ++refl) {
        for (int s0 = 0; s0 < m; ++s0) {
          std::string cand;
          for (int k = 0; k < m; ++k) {
            int comp = refl ? ((s0 - k) % m + m) % m : (s0 + k) % m;
            int node = refl ? ((s0 - k - 1) % m + m) % m : (s0 + k) % m;
            cand += sig[comp] + "~" + node_tail[node] + "~";
          }
          if (best.empty() || cand < best) best = cand;
        }
      }
      return "N" + std::to_string(m) + ":" + best;
    }
  }
  return {};
}

}  // namespace git1
