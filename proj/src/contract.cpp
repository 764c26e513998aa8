#include <algorithm>

#include "git1/errors.hpp"
#include "git1/smyth.hpp"
#include "tree.hpp"

namespace git1 {

namespace {

using detail::TNode;
using Group = std::vector<TNode>;

TNode normalize(const TNode& node);

// Marked nodes stay; an unmarked node collapses onto the point it hangs from,
// so the marked components adjacent to it meet that point instead.
void collect(const TNode& node, Group& out) {
  if (!node.marks.empty()) {
    out.push_back(normalize(node));
    return;
  }
  for (const Group& g : node.joints)
    for (const TNode& child : g) collect(child, out);
}

Group normalize_group(const Group& g) {
  Group out;
  for (const TNode& x : g) collect(x, out);
  return out;
}

TNode normalize(const TNode& node) {
  TNode r;
  r.marks = node.marks;
  for (const Group& g : node.joints) {
    Group ng = normalize_group(g);
    if (!ng.empty()) r.joints.push_back(std::move(ng));
  }
  return r;
}

void append(Group& dst, const Group& src) { dst.insert(dst.end(), src.begin(), src.end()); }

void add_tail(Curve& out, Anchor anchor, const Group& g) {
  if (g.empty()) return;
  out.tails.push_back(detail::tree_to_tail(detail::TTail{anchor, g}));
}

}  // namespace

Curve contract_unmarked(const Curve& input) {
  const Curve c = validate_curve(input, true);
  const int m = c.core.component_count();
  std::vector<std::vector<Group>> smooth(m);
  Group q_group;
  std::vector<Group> node_group(m);
  for (const Tail& t : c.tails) {
    Group g = normalize_group(detail::tail_to_tree(t).top);
    switch (t.anchor.kind) {
      case AnchorKind::SmoothPoint: smooth[t.anchor.component].push_back(std::move(g)); break;
      case AnchorKind::CoreSingular: append(q_group, g); break;
      case AnchorKind::Node: append(node_group[t.anchor.component], g); break;
    }
  }
  std::vector<int> marked;
  for (int k = 0; k < m; ++k)
    if (!c.core_marks[k].empty()) marked.push_back(k);

  Curve out;
  out.n = c.n;
  if (marked.empty()) {
    // The whole minimal elliptic subcurve is contracted: an elliptic k-fold
    // point whose branches are the marked components meeting it.
    Group branches = q_group;
    for (int k = 0; k < m; ++k) {
      for (const Group& g : smooth[k]) append(branches, g);
      append(branches, node_group[k]);
    }
    if (branches.empty()) throw Error(ErrorKind::GenusLost, "no marked component meets the contracted core");
    const int kf = static_cast<int>(branches.size());
    out.core = {CoreKind::Fold, kf};
    out.core_marks.resize(kf);
    for (int b = 0; b < kf; ++b) {
      out.core_marks[b] = branches[b].marks;
      for (const Group& g : branches[b].joints) add_tail(out, {AnchorKind::SmoothPoint, b}, g);
    }
  } else if (c.core.kind == CoreKind::Smooth) {
    out.core = c.core;
    out.core_marks = c.core_marks;
    for (const Group& g : smooth[0]) add_tail(out, {AnchorKind::SmoothPoint, 0}, g);
  } else if (c.core.kind == CoreKind::Fold) {
    const int mm = static_cast<int>(marked.size());
    out.core = {CoreKind::Fold, mm};
    out.core_marks.resize(mm);
    Group q = q_group;
    for (int k = 0; k < m; ++k)
      if (c.core_marks[k].empty())
        for (const Group& g : smooth[k]) append(q, g);
    for (int t = 0; t < mm; ++t) {
      out.core_marks[t] = c.core_marks[marked[t]];
      for (const Group& g : smooth[marked[t]]) add_tail(out, {AnchorKind::SmoothPoint, t}, g);
    }
    add_tail(out, {AnchorKind::CoreSingular, 0}, q);
  } else {
    // Each arc of unmarked cycle components shrinks to a node between its
    // marked neighbours.
    const int mm = static_cast<int>(marked.size());
    out.core = {CoreKind::Ngon, mm};
    out.core_marks.resize(mm);
    for (int t = 0; t < mm; ++t) {
      const int from = marked[t];
      const int to = t + 1 < mm ? marked[t + 1] : marked[0] + m;
      out.core_marks[t] = c.core_marks[from];
      for (const Group& g : smooth[from]) add_tail(out, {AnchorKind::SmoothPoint, t}, g);
      Group node;
      for (int k = from; k < to; ++k) {
        append(node, node_group[k % m]);
        if (k > from)
          for (const Group& g : smooth[k % m]) append(node, g);
      }
      add_tail(out, {AnchorKind::Node, t}, node);
    }
  }
  try {
    return validate_curve(std::move(out), false);
  } catch (const Error& e) {
    throw Error(ErrorKind::GenusLost, std::string("contraction of ") + canonical_form(c) + " is invalid: " + e.what());
  }
}

}  // namespace git1
