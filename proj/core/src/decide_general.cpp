// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/decide_general.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "sufficere/decide_dollar.hpp"
#include "sufficere/suffix_tree.hpp"

namespace sufficere {
namespace {

// Second letters of long internal edges. The letter one below the upper end
// of the edge into x is the first letter of the σ-ancestor of x whose string
// depth is edge_length(x) - 1; a DFS over the σ-tree keeps the current
// σ-path indexed by depth.
std::vector<char> second_letters(const AnnotatedTree& tree,
                                 const StringDepths& depths) {
  const std::size_t n = tree.size();
  std::vector<char> out(n, 0);
  std::vector<std::int32_t> begin(n + 1, 0);
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (tree.is_internal(x)) ++begin[tree.suffix_link(x) + 1];
  }
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  std::vector<NodeId> kids(static_cast<std::size_t>(begin[n]));
  std::vector<std::int32_t> fill(begin.begin(), begin.end() - 1);
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (tree.is_internal(x)) kids[fill[tree.suffix_link(x)]++] = x;
  }

  std::vector<NodeId> path;
  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    const auto h = static_cast<std::size_t>(depths.depth[x]);
    path.resize(h + 1);
    path[h] = x;
    if (x != kRoot) {
      const std::int32_t len = depths.edge_length(tree, x);
      if (len >= 2) out[x] = tree.letter(tree.top(path[len - 1]));
    }
    for (std::int32_t i = begin[x]; i < begin[x + 1]; ++i) {
      stack.push_back(kids[i]);
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::int32_t> parent_;
};

}  // namespace

DecisionContext::DecisionContext(const AnnotatedTree& t)
    : tree(&t),
      depths(compute_string_depths(t)),
      ld(compute_ld(t)),
      second_letter(second_letters(t, depths)) {}

bool DecisionContext::edge_at_least_two(NodeId x) const {
  return tree->is_leaf(x) || depths.edge_length(*tree, x) >= 2;
}

NodeId DecisionContext::anchor(SLocation loc) const {
  return loc.is_explicit() ? loc.node : tree->parent(loc.node);
}

std::int32_t DecisionContext::string_depth(SLocation loc) const {
  return loc.is_explicit() ? depths.depth[loc.node]
                           : depths.depth[tree->parent(loc.node)] + 1;
}

std::vector<SLocation> enumerate_locations(const DecisionContext& ctx) {
  const AnnotatedTree& t = *ctx.tree;
  std::vector<SLocation> by_id;
  for (NodeId x = 0; x < static_cast<NodeId>(t.size()); ++x) {
    if (!t.is_leaf(x)) by_id.push_back(SLocation::at(x));
    if (x != kRoot && ctx.edge_at_least_two(x)) {
      by_id.push_back(SLocation::above(x));
    }
  }
  // Stable counting sort by string depth.
  std::vector<std::int32_t> begin(t.size() + 2, 0);
  for (SLocation loc : by_id) ++begin[ctx.string_depth(loc) + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  std::vector<SLocation> out(by_id.size());
  for (SLocation loc : by_id) out[begin[ctx.string_depth(loc)]++] = loc;
  return out;
}

SuffixLinkTree::SuffixLinkTree(const DecisionContext& ctx)
    : n_(ctx.tree->size()),
      next_(2 * n_, kMissing),
      p_(2 * n_, kNoNode),
      twist_(2 * n_, 0) {
  const AnnotatedTree& t = *ctx.tree;
  const auto nn = static_cast<NodeId>(n_);
  std::vector<char> done(2 * n_, 0);

  for (NodeId x = 0; x < nn; ++x) {
    if (t.is_leaf(x)) continue;
    const std::size_t i = slot(SLocation::at(x));
    next_[i] = x == kRoot ? kEnd
                          : static_cast<std::int32_t>(
                                slot(SLocation::at(t.suffix_link(x))));
    p_[i] = x;
    done[i] = 1;
  }
  std::vector<char> valid(2 * n_, 0);
  for (NodeId x = 1; x < nn; ++x) {
    if (!ctx.edge_at_least_two(x)) continue;
    const std::size_t i = slot(SLocation::above(x));
    valid[i] = 1;
    const NodeId u = t.parent(x);
    if (u == kRoot) {
      next_[i] = static_cast<std::int32_t>(slot(SLocation::at(kRoot)));
      continue;
    }
    const NodeId w = t.suffix_link(u);
    const NodeId z = t.child_by_letter(w, t.letter(x));
    if (z == kNoNode) continue;
    const bool implicit =
        t.is_leaf(z) || ctx.depths.depth[z] - ctx.depths.depth[w] >= 2;
    next_[i] = static_cast<std::int32_t>(
        slot(implicit ? SLocation::above(z) : SLocation::at(z)));
  }

  // Implicit successors chain through implicit points until the first
  // explicit node p; every point on the way shares p and the twist flag.
  std::vector<std::int32_t> walk;
  for (std::size_t start = n_; start < 2 * n_; ++start) {
    if (!valid[start] || done[start]) continue;
    walk.clear();
    std::int32_t j = static_cast<std::int32_t>(start);
    while (!done[j]) {
      walk.push_back(j);
      j = next_[j];
      if (j == kMissing) break;
    }
    NodeId p = kNoNode;
    char twist = 0;
    if (j != kMissing) {
      p = p_[j];
      twist = twist_[j];
      if (static_cast<std::size_t>(j) < n_) {
        twist = t.is_leaf(location(walk.back()).node) ? 1 : 0;
      }
    }
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      p_[*it] = p;
      twist_[*it] = twist;
      done[*it] = 1;
    }
  }
}

SLocation SuffixLinkTree::location(std::int32_t s) const {
  const auto u = static_cast<std::size_t>(s);
  return u < n_ ? SLocation::at(static_cast<NodeId>(u))
                : SLocation::above(static_cast<NodeId>(u - n_));
}

std::optional<SLocation> SuffixLinkTree::next(SLocation loc) const {
  const std::int32_t j = next_[slot(loc)];
  if (j < 0) return std::nullopt;
  return location(j);
}

std::vector<SLocation> SuffixLinkTree::path(SLocation loc) const {
  std::vector<SLocation> out;
  if (!reachable(loc)) return out;
  out.push_back(loc);
  for (std::int32_t j = next_[slot(loc)]; j != kEnd; j = next_[j]) {
    out.push_back(location(j));
  }
  return out;
}

Step1Result step1_filter(const DecisionContext& ctx,
                         const std::vector<SLocation>& locations) {
  const AnnotatedTree& t = *ctx.tree;
  const auto& d = ctx.ld.d;
  Step1Result out;
  std::optional<NodeId> deepest;
  for (NodeId x = 0; x < static_cast<NodeId>(t.size()); ++x) {
    if (d[x] <= -2) {
      out.rejection = Reason::kDLeMinus2;
      return out;
    }
    if (d[x] == -1 && (!deepest || t.tree_depth(x) > t.tree_depth(*deepest))) {
      deepest = x;
    }
  }
  if (!deepest) {
    out.survivors = locations;
    return out;
  }
  for (NodeId x = 0; x < static_cast<NodeId>(t.size()); ++x) {
    if (d[x] == -1 && !t.is_ancestor(x, *deepest)) {
      out.rejection = Reason::kNegDNotAncestors;
      return out;
    }
  }
  const NodeId x = *deepest;
  out.deepest_negative = x;
  for (SLocation loc : locations) {
    const bool keep =
        loc.is_explicit()
            ? t.is_ancestor(x, loc.node)
            : (loc.node != x ? t.is_ancestor(x, loc.node)
                             : d[x] + ctx.ld.ell[x] >= 0);
    if (keep) out.survivors.push_back(loc);
  }
  return out;
}

std::vector<NodeId> twist_candidates(const DecisionContext& ctx,
                                     const SuffixLinkTree& slt,
                                     SLocation loc) {
  std::vector<NodeId> out;
  if (!slt.reachable(loc) || !slt.needs_twist(loc)) return out;
  const AnnotatedTree& t = *ctx.tree;
  const NodeId p = slt.first_explicit(loc);
  const NodeId a = ctx.anchor(loc);
  NodeId on_path = kNoNode;
  if (p == a && !loc.is_explicit()) {
    on_path = loc.node;
  } else if (p != a && t.is_ancestor(p, a)) {
    for (NodeId c : t.children(p)) {
      if (t.is_ancestor(c, a)) on_path = c;
    }
  }
  if (on_path != kNoNode && ctx.ld.d[on_path] >= 0) out.push_back(on_path);
  std::vector<NodeId> rest;
  for (NodeId c : t.children(p)) {
    if (c != on_path && ctx.ld.d[c] > 0) rest.push_back(c);
  }
  std::sort(rest.begin(), rest.end(),
            [&](NodeId a1, NodeId b1) { return t.letter(a1) < t.letter(b1); });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<SLocation> step2_filter(const DecisionContext& ctx,
                                    const SuffixLinkTree& slt,
                                    const std::vector<SLocation>& survivors) {
  const AnnotatedTree& t = *ctx.tree;
  const std::size_t n = t.size();
  const auto& d = ctx.ld.d;

  std::vector<char> has_positive_child(n, 0);
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (d[x] > 0) has_positive_child[t.parent(x)] = 1;
  }
  std::vector<std::int32_t> begin(n + 1, 0);
  for (SLocation loc : survivors) ++begin[ctx.anchor(loc) + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  std::vector<std::int32_t> by_anchor(survivors.size());
  {
    std::vector<std::int32_t> fill(begin.begin(), begin.end() - 1);
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      by_anchor[fill[ctx.anchor(survivors[i])]++] = static_cast<std::int32_t>(i);
    }
  }

  // DFS over the tree; while at node x, path_child[y] is the child of y on
  // the root path of x for every y with in_path[y].
  std::vector<char> keep(survivors.size(), 0);
  std::vector<char> in_path(n, 0);
  std::vector<NodeId> path_child(n, kNoNode);
  std::vector<std::pair<NodeId, bool>> stack{{kRoot, false}};
  while (!stack.empty()) {
    const auto [x, leaving] = stack.back();
    stack.pop_back();
    if (leaving) {
      in_path[x] = 0;
      continue;
    }
    in_path[x] = 1;
    if (x != kRoot) path_child[t.parent(x)] = x;
    for (std::int32_t k = begin[x]; k < begin[x + 1]; ++k) {
      const std::int32_t i = by_anchor[k];
      const SLocation loc = survivors[i];
      if (!slt.reachable(loc)) continue;
      if (!slt.needs_twist(loc)) {
        keep[i] = 1;
        continue;
      }
      // The child of p above s; when s hangs inside an edge out of p, that
      // edge's lower end.
      const NodeId p = slt.first_explicit(loc);
      NodeId on_path = kNoNode;
      if (p == x && !loc.is_explicit()) {
        on_path = loc.node;
      } else if (p != x && in_path[p]) {
        on_path = path_child[p];
      }
      keep[i] = has_positive_child[p] ||
                (on_path != kNoNode && d[on_path] == 0);
    }
    stack.push_back({x, true});
    for (NodeId c : t.children(x)) stack.push_back({c, false});
  }

  std::vector<SLocation> out;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (keep[i]) out.push_back(survivors[i]);
  }
  return out;
}

std::optional<std::vector<SLocation>> step3_filter(
    const DecisionContext& ctx, const std::vector<SLocation>& survivors,
    std::optional<NodeId> deepest_negative) {
  const AnnotatedTree& t = *ctx.tree;
  const std::size_t n = t.size();
  SuffixTourGraph g = build_stg(t, ctx.ld);
  if (!is_eulerian(g, t)) return std::nullopt;

  // First segment of the cycle through the '$'-leaves: root to the parent
  // of the deepest negative node. Opposite arcs cancel.
  if (deepest_negative) {
    for (NodeId w = t.parent(*deepest_negative); w != kRoot && w != kBot;
         w = t.parent(w)) {
      g.add_tree_arcs(w, 1);
    }
  }

  UnionFind uf(n);
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (g.multiplicity(x) != 0) uf.unite(x, t.parent(x));
    if (g.leaf_arc(x) != kNoNode) uf.unite(x, g.leaf_arc(x));
  }
  std::vector<std::int32_t> component_color(n, -1);
  std::int32_t colors = 0;
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (!t.is_leaf(x)) continue;
    auto& c = component_color[uf.find(x)];
    if (c < 0) c = colors++;
  }

  std::vector<char> all_colors(n, 0);
  std::vector<std::int32_t> count(static_cast<std::size_t>(colors), 0);
  std::int32_t distinct = 0;
  std::vector<std::pair<NodeId, bool>> stack{{kRoot, false}};
  while (!stack.empty()) {
    const auto [x, leaving] = stack.back();
    stack.pop_back();
    const std::int32_t c = component_color[uf.find(x)];
    if (leaving) {
      if (c >= 0 && --count[c] == 0) --distinct;
      continue;
    }
    if (c >= 0 && count[c]++ == 0) ++distinct;
    all_colors[x] = distinct == colors ? 1 : 0;
    stack.push_back({x, true});
    for (NodeId child : t.children(x)) stack.push_back({child, false});
  }

  // A new node above v inherits the leaf arcs into v, and has arcs down to
  // v when d(v) > 0, so it joins v's component.
  std::vector<SLocation> out;
  for (SLocation loc : survivors) {
    NodeId reach = ctx.anchor(loc);
    if (!loc.is_explicit() &&
        (ctx.ld.ell[loc.node] > 0 || ctx.ld.d[loc.node] > 0)) {
      reach = loc.node;
    }
    if (all_colors[reach]) out.push_back(loc);
  }
  return out;
}

AnnotatedTree augment(const DecisionContext& ctx, const SuffixLinkTree& slt,
                      SLocation loc, std::optional<NodeId> twist) {
  const AnnotatedTree& t = *ctx.tree;
  const std::vector<SLocation> path = slt.path(loc);
  if (path.empty()) throw AugmentError("suffix-link path leaves the tree");

  // Letter below each split point: hidden second letter for internal edges;
  // for leaf edges, the letter below the next split point, or the twist
  // node's letter when the next point is explicit.
  std::vector<char> lower(path.size(), 0);
  char carry = 0;
  for (std::size_t i = path.size(); i-- > 0;) {
    const SLocation here = path[i];
    if (here.is_explicit()) {
      carry = 0;
      continue;
    }
    if (!t.is_leaf(here.node)) {
      lower[i] = ctx.second_letter[here.node];
    } else if (i + 1 < path.size() && path[i + 1].is_explicit()) {
      if (!twist) throw AugmentError("twist node required");
      lower[i] = t.letter(*twist);
    } else {
      lower[i] = carry;
    }
    carry = lower[i];
    if (lower[i] == 0 || lower[i] == kTerminator) {
      throw AugmentError("no letter for the lower part of a split edge");
    }
  }

  std::vector<NodeId> parent = t.parents();
  std::vector<char> letter = t.letters();
  std::vector<NodeId> link = t.suffix_links();
  const auto add_node = [&](NodeId par, char c) {
    parent.push_back(par);
    letter.push_back(c);
    link.push_back(kNoNode);
    return static_cast<NodeId>(parent.size() - 1);
  };

  std::vector<NodeId> point(path.size(), kNoNode);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const SLocation here = path[i];
    if (here.is_explicit()) {
      if (t.child_by_letter(here.node, kTerminator) != kNoNode) {
        throw AugmentError("node already has a '$' child");
      }
      point[i] = here.node;
    } else {
      const NodeId v = here.node;
      const NodeId m = add_node(parent[v], letter[v]);
      parent[v] = m;
      letter[v] = lower[i];
      point[i] = m;
    }
    add_node(point[i], kTerminator);
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!path[i].is_explicit()) link[point[i]] = point[i + 1];
  }
  try {
    return AnnotatedTree::from_arrays(std::move(parent), std::move(letter),
                                      std::move(link));
  } catch (const TreeError& e) {
    throw AugmentError(e.what());
  }
}

namespace {

// Fate of every candidate location, for DecideOptions::trace.
class Tracer {
 public:
  Tracer(bool enabled, std::size_t n, const std::vector<SLocation>& locations)
      : enabled_(enabled), n_(n) {
    if (!enabled_) return;
    index_.assign(2 * n_, -1);
    for (SLocation loc : locations) {
      index_[slot(loc)] = static_cast<std::int32_t>(entries_.size());
      entries_.push_back({loc, Stage::kNotTried});
    }
  }

  void mark(SLocation loc, Stage stage) {
    if (enabled_) entries_[index_[slot(loc)]].stage = stage;
  }

  // `after` is a subsequence of `before`.
  void dropped(const std::vector<SLocation>& before,
               const std::vector<SLocation>& after, Stage stage) {
    if (!enabled_) return;
    std::size_t j = 0;
    for (SLocation loc : before) {
      if (j < after.size() && after[j] == loc) {
        ++j;
      } else {
        mark(loc, stage);
      }
    }
  }

  std::vector<LocationTrace> take() { return std::move(entries_); }

 private:
  std::size_t slot(SLocation loc) const {
    return static_cast<std::size_t>(loc.node) + (loc.is_explicit() ? 0 : n_);
  }

  bool enabled_;
  std::size_t n_;
  std::vector<std::int32_t> index_;
  std::vector<LocationTrace> entries_;
};

}  // namespace

Verdict decide_suffix_tree(const AnnotatedTree& tree, DecideOptions options) {
  if (tree.has_terminator()) {
    return decide_dollar(tree, DollarOptions{options.verify});
  }
  const ValidationReport report = validate_preconditions(tree);
  if (!report.ok()) {
    return Verdict::no(report.first()->rule == Rule::kP2
                           ? Reason::kPreconditionP2
                           : Reason::kPreconditionP1);
  }

  const DecisionContext ctx(tree);
  const std::vector<SLocation> locations = enumerate_locations(ctx);
  Tracer tracer(options.trace, tree.size(), locations);
  const auto finish = [&](Verdict v) {
    v.trace = tracer.take();
    return v;
  };

  Step1Result s1 = step1_filter(ctx, locations);
  if (s1.rejection) return finish(Verdict::no(*s1.rejection));
  tracer.dropped(locations, s1.survivors, Stage::kStep1);

  const SuffixLinkTree slt(ctx);
  std::vector<SLocation> reachable;
  for (SLocation loc : s1.survivors) {
    if (slt.reachable(loc)) reachable.push_back(loc);
  }
  tracer.dropped(s1.survivors, reachable, Stage::kBrokenPath);
  std::vector<SLocation> s2 = step2_filter(ctx, slt, reachable);
  tracer.dropped(reachable, s2, Stage::kStep2);

  auto s3 = step3_filter(ctx, s2, s1.deepest_negative);
  if (!s3) return finish(Verdict::no(Reason::kNotEulerian));
  tracer.dropped(s2, *s3, Stage::kStep3);
  if (s3->empty()) return finish(Verdict::no(Reason::kNoSurvivor));

  bool verify_failed = false;
  for (SLocation loc : *s3) {
    std::vector<std::optional<NodeId>> twists;
    if (slt.needs_twist(loc)) {
      for (NodeId c : twist_candidates(ctx, slt, loc)) twists.push_back(c);
    } else {
      twists.push_back(std::nullopt);
    }
    Stage fate = Stage::kAugment;
    for (const auto& twist : twists) {
      std::optional<AnnotatedTree> augmented;
      try {
        augmented = augment(ctx, slt, loc, twist);
      } catch (const AugmentError&) {
        continue;
      }
      Verdict inner = decide_dollar(*augmented, DollarOptions{false});
      if (!inner.is_suffix_tree) {
        fate = Stage::kDollarTree;
        continue;
      }
      std::string s = std::move(inner.realizer);
      s.pop_back();
      if (options.verify && !realizes(s, tree)) {
        fate = Stage::kVerify;
        verify_failed = true;
        continue;
      }
      tracer.mark(loc, Stage::kAccepted);
      Verdict v = Verdict::yes(std::move(s));
      v.location = loc;
      v.augmented = std::move(augmented);
      return finish(std::move(v));
    }
    tracer.mark(loc, fate);
  }
  return finish(Verdict::no(verify_failed ? Reason::kVerificationFailed
                                          : Reason::kNoSurvivor));
}

}  // namespace sufficere
