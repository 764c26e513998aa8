#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <unordered_map>

#include "git1/curve.hpp"
#include "git1/errors.hpp"
#include "tree.hpp"

namespace git1 {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GIT1_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 2'000'000;
}

namespace {

using detail::TNode;
using Mask = std::uint32_t;

std::vector<int> mask_marks(Mask s) {
  std::vector<int> out;
  for (int b = 0; s; ++b, s >>= 1)
    if (s & 1u) out.push_back(b + 1);
  return out;
}

// Calls f(blocks) for every set partition of s into nonempty blocks.
void for_each_partition(Mask s, std::vector<Mask>& blocks, const std::function<void(const std::vector<Mask>&)>& f) {
  if (!s) {
    f(blocks);
    return;
  }
  Mask low = s & (~s + 1);
  Mask rest = s & ~low;
  // Iterate over all submasks of rest (including empty) to join `low`.
  Mask sub = rest;
  while (true) {
    blocks.push_back(low | sub);
    for_each_partition(rest & ~sub, blocks, f);
    blocks.pop_back();
    if (!sub) break;
    sub = (sub - 1) & rest;
  }
}

struct TreeGen {
  TNode node;
  int comps;
  int unmarked;
};

struct GroupGen {
  std::vector<TNode> group;
  int comps;
  int unmarked;
};

struct DecorGen {
  std::vector<int> marks;
  std::vector<std::vector<TNode>> tails;
  int comps;
  int unmarked;
};

class Enumerator {
 public:
  Enumerator(int n, const EnumOptions& o) : n_(n), o_(o) {
    max_tail_ = o.max_tail_components < 0 ? n : o.max_tail_components;
    max_core_ = o.max_core_m < 0 ? n : o.max_core_m;
    max_unmarked_ = o.allow_unmarked ? o.max_unmarked : 0;
    budget_ = o.budget ? o.budget : default_budget();
  }

  std::vector<Curve> run() {
    const Mask all = n_ >= 32 ? ~Mask(0) : ((Mask(1) << n_) - 1);
    add_smooth(all);
    for (int m = 1; m <= max_core_; ++m) {
      add_fold(all, m);
      add_ngon(all, m);
    }
    std::vector<Curve> out;
    out.reserve(classes_.size());
    for (auto& kv : classes_) out.push_back(std::move(kv.second));
    return out;
  }

 private:
  void tick() {
    if (++work_ > budget_ * 8)
      throw Error(ErrorKind::BudgetExceeded, "enumeration work exceeded budget " + std::to_string(budget_));
  }

  const std::vector<TreeGen>& trees(Mask s) {
    auto it = tree_memo_.find(s);
    if (it != tree_memo_.end()) return it->second;
    std::vector<TreeGen> out;
    // Root marks: a submask of s; the remainder hangs off joints.
    Mask sub = s;
    while (true) {
      Mask marks = sub, rest = s & ~sub;
      bool root_unmarked = marks == 0;
      if (!(root_unmarked && max_unmarked_ == 0)) {
        std::vector<Mask> blocks;
        for_each_partition(rest, blocks, [&](const std::vector<Mask>& bl) {
          int special = 1 + std::popcount(marks) + static_cast<int>(bl.size());
          if (special < o_.min_tail_special) return;
          TNode root;
          root.marks = mask_marks(marks);
          combine_joints(bl, 0, root, 1, root_unmarked ? 1 : 0, out);
        });
      }
      if (!sub) break;
      sub = (sub - 1) & s;
    }
    return tree_memo_.emplace(s, std::move(out)).first->second;
  }

  void combine_joints(const std::vector<Mask>& bl, std::size_t i, TNode& root, int comps, int unmarked,
                      std::vector<TreeGen>& out) {
    if (comps > max_tail_ || unmarked > max_unmarked_) return;
    if (i == bl.size()) {
      tick();
      out.push_back({root, comps, unmarked});
      return;
    }
    for (const GroupGen& g : groups(bl[i])) {
      root.joints.push_back(g.group);
      combine_joints(bl, i + 1, root, comps + g.comps, unmarked + g.unmarked, out);
      root.joints.pop_back();
    }
  }

  const std::vector<GroupGen>& groups(Mask s) {
    auto it = group_memo_.find(s);
    if (it != group_memo_.end()) return it->second;
    std::vector<GroupGen> out;
    if (o_.nodal_smooth_tails) {
      for (const TreeGen& t : trees(s)) out.push_back({{t.node}, t.comps, t.unmarked});
    } else {
      std::vector<Mask> blocks;
      for_each_partition(s, blocks, [&](const std::vector<Mask>& bl) {
        std::vector<TNode> group;
        combine_group(bl, 0, group, 0, 0, out);
      });
    }
    return group_memo_.emplace(s, std::move(out)).first->second;
  }

  void combine_group(const std::vector<Mask>& bl, std::size_t i, std::vector<TNode>& group, int comps,
                     int unmarked, std::vector<GroupGen>& out) {
    if (comps > max_tail_ || unmarked > max_unmarked_) return;
    if (i == bl.size()) {
      tick();
      out.push_back({group, comps, unmarked});
      return;
    }
    for (const TreeGen& t : trees(bl[i])) {
      group.push_back(t.node);
      combine_group(bl, i + 1, group, comps + t.comps, unmarked + t.unmarked, out);
      group.pop_back();
    }
  }

  const std::vector<DecorGen>& decor(Mask s) {
    auto it = decor_memo_.find(s);
    if (it != decor_memo_.end()) return it->second;
    std::vector<DecorGen> out;
    Mask sub = s;
    while (true) {
      Mask marks = sub, rest = s & ~sub;
      bool unmarked = marks == 0;
      if (!(unmarked && max_unmarked_ == 0)) {
        std::vector<Mask> blocks;
        for_each_partition(rest, blocks, [&](const std::vector<Mask>& bl) {
          DecorGen d{mask_marks(marks), {}, 0, unmarked ? 1 : 0};
          combine_decor(bl, 0, d, out);
        });
      }
      if (!sub) break;
      sub = (sub - 1) & s;
    }
    return decor_memo_.emplace(s, std::move(out)).first->second;
  }

  void combine_decor(const std::vector<Mask>& bl, std::size_t i, DecorGen& d, std::vector<DecorGen>& out) {
    if (d.comps > max_tail_ || d.unmarked > max_unmarked_) return;
    if (i == bl.size()) {
      tick();
      out.push_back(d);
      return;
    }
    for (const GroupGen& g : groups(bl[i])) {
      d.tails.push_back(g.group);
      d.comps += g.comps;
      d.unmarked += g.unmarked;
      combine_decor(bl, i + 1, d, out);
      d.unmarked -= g.unmarked;
      d.comps -= g.comps;
      d.tails.pop_back();
    }
  }

  void emit(Curve c) {
    tick();
    if (total_components(c) - c.core.component_count() > max_tail_) return;
    if (unmarked_component_count(c) > max_unmarked_) return;
    try {
      c = validate_curve(std::move(c), o_.allow_unmarked);
    } catch (const Error&) {
      return;
    }
    std::string key = canonical_form(c);
    if (classes_.count(key)) return;
    if (classes_.size() >= budget_)
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget_) + " classes");
    classes_.emplace(std::move(key), std::move(c));
  }

  static void attach_decor(Curve& c, int comp, const DecorGen& d) {
    c.core_marks[comp] = d.marks;
    for (const auto& g : d.tails) {
      detail::TTail tt{{AnchorKind::SmoothPoint, comp}, g};
      c.tails.push_back(detail::tree_to_tail(tt));
    }
  }

  Curve blank(CoreKind kind, int m) const {
    Curve c;
    c.n = n_;
    c.core = {kind, m};
    c.core_marks.assign(kind == CoreKind::Smooth ? 1 : m, {});
    return c;
  }

  void add_smooth(Mask all) {
    for (const DecorGen& d : decor(all)) {
      Curve c = blank(CoreKind::Smooth, 1);
      attach_decor(c, 0, d);
      emit(std::move(c));
    }
  }

  // Elliptic m-fold core: components are unordered, optional tail at q.
  void add_fold(Mask all, int m) {
    Mask q = all;
    while (true) {
      Mask rest = all & ~q;
      if (q == 0 || !o_.nodal_smooth_tails) {
        std::vector<Mask> blocks;
        for_each_partition(rest, blocks, [&](const std::vector<Mask>& bl) {
          if (static_cast<int>(bl.size()) != m) return;
          if (q == 0) {
            fold_slots(bl, 0, blank(CoreKind::Fold, m), nullptr);
          } else {
            for (const GroupGen& g : groups(q)) fold_slots(bl, 0, blank(CoreKind::Fold, m), &g);
          }
        });
      }
      if (!q) break;
      q = (q - 1) & all;
    }
  }

  void fold_slots(const std::vector<Mask>& bl, std::size_t i, Curve c, const GroupGen* qtail) {
    if (i == bl.size()) {
      if (qtail) {
        detail::TTail tt{{AnchorKind::CoreSingular, 0}, qtail->group};
        c.tails.push_back(detail::tree_to_tail(tt));
      }
      emit(std::move(c));
      return;
    }
    for (const DecorGen& d : decor(bl[i])) {
      Curve next = c;
      attach_decor(next, static_cast<int>(i), d);
      fold_slots(bl, i + 1, std::move(next), qtail);
    }
  }

  // m-gon core: slots alternate component, node, component, node, ...
  void add_ngon(Mask all, int m) { ngon_slots(all, 0, blank(CoreKind::Ngon, m)); }

  void ngon_slots(Mask rest, int slot, Curve c) {
    const int m = c.core.m;
    if (slot == 2 * m) {
      if (rest == 0) emit(std::move(c));
      return;
    }
    const int k = slot / 2;
    const bool node = slot % 2 == 1;
    if (node && o_.nodal_smooth_tails) {
      ngon_slots(rest, slot + 1, std::move(c));
      return;
    }
    // Leave enough marks for the remaining components.
    Mask sub = rest;
    while (true) {
      if (node) {
        if (sub == 0) {
          ngon_slots(rest, slot + 1, c);
        } else {
          for (const GroupGen& g : groups(sub)) {
            Curve next = c;
            detail::TTail tt{{AnchorKind::Node, k}, g.group};
            next.tails.push_back(detail::tree_to_tail(tt));
            ngon_slots(rest & ~sub, slot + 1, std::move(next));
          }
        }
      } else if (sub != 0) {
        for (const DecorGen& d : decor(sub)) {
          Curve next = c;
          attach_decor(next, k, d);
          ngon_slots(rest & ~sub, slot + 1, std::move(next));
        }
      }
      if (!sub) break;
      sub = (sub - 1) & rest;
    }
  }

  int n_;
  EnumOptions o_;
  int max_tail_ = 0, max_core_ = 0, max_unmarked_ = 0;
  std::uint64_t budget_ = 0, work_ = 0;
  std::unordered_map<Mask, std::vector<TreeGen>> tree_memo_;
  std::unordered_map<Mask, std::vector<GroupGen>> group_memo_;
  std::unordered_map<Mask, std::vector<DecorGen>> decor_memo_;
  std::map<std::string, Curve> classes_;
};

}  // namespace

std::vector<Curve> enumerate_curves(int n, const EnumOptions& opts) {
  if (n < 1) throw Error(ErrorKind::Parse, "n must be at least 1");
  if (n > 16) throw Error(ErrorKind::BudgetExceeded, "n too large for exhaustive enumeration");
  return Enumerator(n, opts).run();
}

}  // namespace git1
