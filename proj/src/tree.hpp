#pragma once

// Rooted-tree view of tails, shared by canonical forms, enumeration and
// contraction.

#include <string>
#include <vector>

#include "git1/curve.hpp"

namespace git1::detail {

struct TNode {
  std::vector<int> marks;
  std::vector<std::vector<TNode>> joints;  // each joint: components meeting this one at one point
};

struct TTail {
  Anchor anchor;
  std::vector<TNode> top;  // components meeting the core at the anchor
};

TTail tail_to_tree(const Tail& t);
Tail tree_to_tail(const TTail& t);

std::string node_canon(const TNode& n);
std::string group_canon(const std::vector<TNode>& group);

int node_component_count(const TNode& n);
int node_unmarked_count(const TNode& n);

std::string marks_canon(const std::vector<int>& marks);

}  // namespace git1::detail
