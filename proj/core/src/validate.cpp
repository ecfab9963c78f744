// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "sufficere/tree.hpp"

namespace sufficere {

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::kP1: return "P1";
    case Rule::kP2: return "P2";
    case Rule::kSiblingLetters: return "SIBLING_LETTERS";
    case Rule::kShape: return "SHAPE";
  }
  return "UNKNOWN";
}

std::optional<Violation> ValidationReport::first() const {
  if (failures.empty()) return std::nullopt;
  return failures.front();
}

namespace {

constexpr std::int32_t kUnset = -1;
constexpr std::int32_t kBroken = -2;

// Number of suffix-link hops from every internal node to the root; kBroken
// for nodes whose chain is missing a link or runs into a cycle. Leaves get
// kUnset. Each node is walked once.
std::vector<std::int32_t> hop_counts(const AnnotatedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<std::int32_t> depth(n, kUnset);
  std::vector<char> on_walk(n, 0);
  depth[kRoot] = 0;
  std::vector<NodeId> walk;
  for (NodeId start = 1; start < static_cast<NodeId>(n); ++start) {
    if (tree.is_leaf(start) || depth[start] != kUnset) continue;
    walk.clear();
    NodeId x = start;
    std::int32_t base = kBroken;
    while (true) {
      if (x == kNoNode || x == kBot || tree.is_leaf(x) || on_walk[x]) break;
      if (depth[x] != kUnset) {
        base = depth[x];
        break;
      }
      on_walk[x] = 1;
      walk.push_back(x);
      x = tree.suffix_link(x);
    }
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      on_walk[*it] = 0;
      if (base != kBroken) ++base;
      depth[*it] = base;
    }
  }
  return depth;
}

}  // namespace

ValidationReport validate_preconditions(const AnnotatedTree& tree) {
  ValidationReport report;
  const std::size_t n = tree.size();

  // Shape and sibling letters are enforced on construction; re-checked here
  // so the report stands on its own.
  for (NodeId x = 0; x < static_cast<NodeId>(n); ++x) {
    if (x != kRoot && tree.child_count(x) == 1) {
      report.failures.push_back({Rule::kShape, x});
    }
    const auto kids = tree.children(x);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (tree.letter(kids[i]) == tree.letter(kids[j])) {
          report.failures.push_back({Rule::kSiblingLetters, kids[j]});
        }
      }
    }
  }

  const auto depth = hop_counts(tree);
  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    if (tree.is_leaf(x)) continue;
    if (depth[x] == kBroken) {
      report.failures.push_back({Rule::kP1, x});
      continue;
    }
    const NodeId p = tree.parent(x);
    if (depth[p] >= 0 && depth[x] <= depth[p]) {
      report.failures.push_back({Rule::kP1, x});
    }
  }

  for (NodeId x = 1; x < static_cast<NodeId>(n); ++x) {
    const NodeId p = tree.parent(x);
    if (p == kRoot) continue;  // σ(root) = ⊥, whose only child matches all
    const NodeId y = tree.suffix_link(p);
    if (y < 0) continue;  // already a P1 failure at p
    const NodeId z = tree.child_by_letter(y, tree.letter(x));
    if (z == kNoNode) {
      report.failures.push_back({Rule::kP2, x});
      continue;
    }
    const NodeId s = tree.suffix_link(x);
    if (tree.is_internal(x) && s >= 0 && !tree.is_ancestor(z, s)) {
      report.failures.push_back({Rule::kP2, x});
    }
  }
  return report;
}

StringDepths compute_string_depths(const AnnotatedTree& tree) {
  StringDepths out;
  out.depth = hop_counts(tree);
  for (NodeId x = 1; x < static_cast<NodeId>(tree.size()); ++x) {
    if (tree.is_leaf(x)) continue;
    if (out.depth[x] == kBroken) {
      throw TreeError(TreeErrorCode::kMissingLink,
                      "suffix links from node " + std::to_string(x) +
                          " do not reach the root");
    }
  }
  for (NodeId x = 1; x < static_cast<NodeId>(tree.size()); ++x) {
    if (tree.is_leaf(x)) continue;
    if (out.edge_length(tree, x) <= 0) {
      throw TreeError(TreeErrorCode::kNonpositiveEdge,
                      "edge into node " + std::to_string(x) +
                          " has non-positive length");
    }
  }
  return out;
}

}  // namespace sufficere
