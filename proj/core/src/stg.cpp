// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/stg.hpp"

#include <algorithm>
#include <string>

namespace sufficere {

NodeId leaf_target(const AnnotatedTree& tree, NodeId leaf) {
  const NodeId p = tree.parent(leaf);
  if (p == kRoot) return kRoot;
  const NodeId y = tree.suffix_link(p);
  if (y < 0) return kNoNode;
  return tree.child_by_letter(y, tree.letter(leaf));
}

LDValues compute_ld(const AnnotatedTree& tree) {
  const std::size_t n = tree.size();
  LDValues ld{std::vector<std::int32_t>(n, 0), std::vector<std::int32_t>(n, 0)};
  for (NodeId y = 1; y < static_cast<NodeId>(n); ++y) {
    if (!tree.is_leaf(y)) continue;
    const NodeId x = leaf_target(tree, y);
    if (x >= 0) ++ld.ell[x];
  }
  // d(x) = |L_x| - Σ_{y ∈ V_x} ℓ(y), accumulated bottom-up.
  const auto& order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId x = *it;
    ld.d[x] += (tree.is_leaf(x) ? 1 : 0) - ld.ell[x];
    if (x != kRoot) ld.d[tree.parent(x)] += ld.d[x];
  }
  return ld;
}

NoMatchingChild::NoMatchingChild(NodeId leaf)
    : std::runtime_error("NO_MATCHING_CHILD: leaf " + std::to_string(leaf) +
                         " has no suffix-link target"),
      leaf_(leaf) {}

SuffixTourGraph::SuffixTourGraph(const AnnotatedTree& tree, const LDValues& ld)
    : multiplicity_(tree.size(), 0), leaf_arc_(tree.size(), kNoNode) {
  for (NodeId x = 1; x < static_cast<NodeId>(tree.size()); ++x) {
    multiplicity_[x] = ld.d[x];
    if (tree.is_leaf(x)) {
      const NodeId target = leaf_target(tree, x);
      if (target < 0) throw NoMatchingChild(x);
      leaf_arc_[x] = target;
    }
  }
}

std::int64_t SuffixTourGraph::arc_count() const {
  std::int64_t total = 0;
  for (std::size_t x = 0; x < multiplicity_.size(); ++x) {
    total += multiplicity_[x] < 0 ? -multiplicity_[x] : multiplicity_[x];
    if (leaf_arc_[x] != kNoNode) ++total;
  }
  return total;
}

std::vector<std::int64_t> SuffixTourGraph::in_degrees(
    const AnnotatedTree& tree) const {
  std::vector<std::int64_t> in(size(), 0);
  for (NodeId x = 1; x < static_cast<NodeId>(size()); ++x) {
    const std::int64_t k = multiplicity_[x];
    if (k > 0) in[x] += k;
    if (k < 0) in[tree.parent(x)] -= k;
    if (leaf_arc_[x] != kNoNode) ++in[leaf_arc_[x]];
  }
  return in;
}

std::vector<std::int64_t> SuffixTourGraph::out_degrees(
    const AnnotatedTree& tree) const {
  std::vector<std::int64_t> out(size(), 0);
  for (NodeId x = 1; x < static_cast<NodeId>(size()); ++x) {
    const std::int64_t k = multiplicity_[x];
    if (k > 0) out[tree.parent(x)] += k;
    if (k < 0) out[x] -= k;
    if (leaf_arc_[x] != kNoNode) ++out[x];
  }
  return out;
}

SuffixTourGraph build_stg(const AnnotatedTree& tree, const LDValues& ld) {
  return SuffixTourGraph(tree, ld);
}

SuffixTourGraph build_stg(const AnnotatedTree& tree) {
  return SuffixTourGraph(tree, compute_ld(tree));
}

bool is_eulerian(const SuffixTourGraph& g, const AnnotatedTree& tree) {
  return g.in_degrees(tree) == g.out_degrees(tree);
}

std::optional<std::string> euler_tour_string(const SuffixTourGraph& g,
                                             const AnnotatedTree& tree,
                                             char terminator) {
  const std::size_t n = tree.size();
  if (tree.leaf_count() == 0) return std::string();

  // Outgoing arcs in tie-break order, stored as (target, remaining count).
  struct Arc {
    NodeId target;
    std::int64_t count;
  };
  std::vector<std::int32_t> begin(n + 1, 0);
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    std::int32_t k = 0;
    for (NodeId c : tree.children(x)) k += g.multiplicity(c) > 0 ? 1 : 0;
    if (g.multiplicity(x) < 0) ++k;
    if (g.leaf_arc(x) != kNoNode) ++k;
    begin[x + 1] = begin[x] + k;
  }
  std::vector<Arc> arcs(static_cast<std::size_t>(begin[n]));
  std::vector<NodeId> kids;
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    std::int32_t pos = begin[x];
    const auto c = tree.children(x);
    kids.assign(c.begin(), c.end());
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return tree.letter(a) < tree.letter(b);
    });
    for (NodeId child : kids) {
      if (g.multiplicity(child) > 0) arcs[pos++] = {child, g.multiplicity(child)};
    }
    if (g.multiplicity(x) < 0) arcs[pos++] = {tree.parent(x), -g.multiplicity(x)};
    if (g.leaf_arc(x) != kNoNode) arcs[pos++] = {g.leaf_arc(x), 1};
  }

  std::vector<std::int32_t> cursor(begin.begin(), begin.end() - 1);
  std::vector<NodeId> stack{kRoot};
  std::vector<NodeId> circuit;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    while (cursor[v] < begin[v + 1] && arcs[cursor[v]].count == 0) ++cursor[v];
    if (cursor[v] == begin[v + 1]) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    Arc& arc = arcs[cursor[v]];
    --arc.count;
    stack.push_back(arc.target);
  }
  std::reverse(circuit.begin(), circuit.end());

  std::vector<NodeId> leaves;
  leaves.reserve(tree.leaf_count());
  for (NodeId v : circuit) {
    if (tree.is_leaf(v)) leaves.push_back(v);
  }
  if (leaves.size() != tree.leaf_count()) return std::nullopt;

  const NodeId end_leaf = tree.child_by_letter(kRoot, terminator);
  if (end_leaf != kNoNode && tree.is_leaf(end_leaf)) {
    const auto it = std::find(leaves.begin(), leaves.end(), end_leaf);
    std::rotate(leaves.begin(), it + 1, leaves.end());
  }

  std::string out;
  out.reserve(leaves.size());
  for (NodeId leaf : leaves) out.push_back(tree.letter(tree.top(leaf)));
  return out;
}

std::string to_dot(const SuffixTourGraph& g, const AnnotatedTree& tree) {
  std::string out = "digraph stg {\n  node [shape=circle];\n";
  for (NodeId x = 0; x < static_cast<NodeId>(tree.size()); ++x) {
    out += "  n" + std::to_string(x) + " [label=\"" + std::to_string(x) + "\"";
    if (tree.is_leaf(x)) out += ", style=filled";
    out += "];\n";
  }
  for (NodeId x = 1; x < static_cast<NodeId>(tree.size()); ++x) {
    const std::int64_t k = g.multiplicity(x);
    if (k == 0) continue;
    const NodeId from = k > 0 ? tree.parent(x) : x;
    const NodeId to = k > 0 ? x : tree.parent(x);
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) +
           " [label=\"" + std::to_string(k > 0 ? k : -k) + "\"];\n";
  }
  for (NodeId x = 1; x < static_cast<NodeId>(tree.size()); ++x) {
    if (g.leaf_arc(x) == kNoNode) continue;
    out += "  n" + std::to_string(x) + " -> n" +
           std::to_string(g.leaf_arc(x)) + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string format_ld_table(const AnnotatedTree& tree, const LDValues& ld) {
  std::string out;
  for (NodeId x = 0; x < static_cast<NodeId>(tree.size()); ++x) {
    out += std::to_string(x) + (tree.is_leaf(x) ? " leaf" : " internal") +
           " l=" + std::to_string(ld.ell[x]) + " d=" + std::to_string(ld.d[x]) +
           "\n";
  }
  return out;
}

}  // namespace sufficere
