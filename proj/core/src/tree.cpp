// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/tree.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace sufficere {

bool is_edge_letter(char c) noexcept {
  return c > ' ' && c <= '~' && c != kWildcard && c != '#';
}

std::string_view error_code_name(TreeErrorCode code) noexcept {
  switch (code) {
    case TreeErrorCode::kSyntax: return "SYNTAX";
    case TreeErrorCode::kNodeCount: return "NODE_COUNT";
    case TreeErrorCode::kDanglingNode: return "DANGLING_NODE";
    case TreeErrorCode::kNotATree: return "NOT_A_TREE";
    case TreeErrorCode::kSiblingLetters: return "SIBLING_LETTERS";
    case TreeErrorCode::kUnaryNode: return "UNARY_NODE";
    case TreeErrorCode::kReservedLetter: return "RESERVED_LETTER";
    case TreeErrorCode::kLinkOnLeaf: return "LINK_ON_LEAF";
    case TreeErrorCode::kLinkTarget: return "LINK_TARGET";
    case TreeErrorCode::kDuplicateLink: return "DUPLICATE_LINK";
    case TreeErrorCode::kRootLink: return "ROOT_LINK";
    case TreeErrorCode::kNonpositiveEdge: return "NONPOSITIVE_EDGE";
    case TreeErrorCode::kMissingLink: return "MISSING_LINK";
  }
  return "UNKNOWN";
}

namespace {

std::string with_position(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

TreeError::TreeError(TreeErrorCode code, const std::string& message, int line,
                     int column)
    : std::runtime_error(std::string(error_code_name(code)) + ": " +
                         with_position(message, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

AnnotatedTree::AnnotatedTree()
    : parent_{kBot}, letter_{kWildcard}, link_{kBot}, child_begin_{0, 0} {
  index();
}

AnnotatedTree AnnotatedTree::from_arrays(std::vector<NodeId> parent,
                                         std::vector<char> letter,
                                         std::vector<NodeId> suffix_link) {
  std::vector<NodeId> order;
  order.reserve(parent.size());
  for (NodeId x = 1; x < static_cast<NodeId>(parent.size()); ++x) {
    order.push_back(x);
  }
  return assemble(std::move(parent), std::move(letter), std::move(suffix_link),
                  order, {});
}

AnnotatedTree AnnotatedTree::assemble(std::vector<NodeId> parent,
                                      std::vector<char> letter,
                                      std::vector<NodeId> suffix_link,
                                      const std::vector<NodeId>& order,
                                      const std::vector<int>& lines) {
  const auto line_of = [&](NodeId x) {
    return x >= 0 && static_cast<std::size_t>(x) < lines.size() ? lines[x] : 0;
  };
  const std::size_t n = parent.size();
  if (n == 0 || letter.size() != n || suffix_link.size() != n) {
    throw TreeError(TreeErrorCode::kNodeCount,
                    "parent, letter and suffix-link arrays must be non-empty "
                    "and of equal length");
  }
  if (n > static_cast<std::size_t>(INT32_MAX / 2)) {
    throw TreeError(TreeErrorCode::kNodeCount, "tree too large");
  }
  parent[0] = kBot;
  letter[0] = kWildcard;
  suffix_link[0] = kBot;
  const auto in_range = [n](NodeId x) {
    return x >= 0 && static_cast<std::size_t>(x) < n;
  };

  std::vector<std::int32_t> degree(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto x = static_cast<NodeId>(i);
    if (!in_range(parent[i])) {
      throw TreeError(TreeErrorCode::kDanglingNode,
                      "node " + std::to_string(x) + " has no valid parent",
                      line_of(x));
    }
    if (parent[i] == x) {
      throw TreeError(TreeErrorCode::kNotATree,
                      "node " + std::to_string(x) + " is its own parent",
                      line_of(x));
    }
    if (!is_edge_letter(letter[i])) {
      throw TreeError(TreeErrorCode::kReservedLetter,
                      "edge into node " + std::to_string(x) +
                          " has an invalid first letter",
                      line_of(x));
    }
    ++degree[parent[i]];
  }
  if (order.size() != n - 1) {
    throw TreeError(TreeErrorCode::kNodeCount,
                    "expected " + std::to_string(n - 1) + " edges");
  }

  AnnotatedTree t;
  t.child_begin_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    t.child_begin_[i + 1] = t.child_begin_[i] + degree[i];
  }
  t.child_ids_.assign(n - 1, kNoNode);
  std::vector<std::int32_t> fill(t.child_begin_.begin(),
                                 t.child_begin_.end() - 1);
  for (NodeId x : order) {
    t.child_ids_[fill[parent[x]]++] = x;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<NodeId>(i);
    const std::size_t deg = static_cast<std::size_t>(degree[i]);
    if (x != kRoot && deg == 1) {
      throw TreeError(TreeErrorCode::kUnaryNode,
                      "internal node " + std::to_string(x) +
                          " has a single child",
                      line_of(x));
    }
    std::array<bool, 128> seen{};
    for (std::int32_t k = t.child_begin_[i]; k < t.child_begin_[i + 1]; ++k) {
      const NodeId c = t.child_ids_[k];
      const auto ch = static_cast<unsigned char>(letter[c]);
      if (seen[ch]) {
        throw TreeError(TreeErrorCode::kSiblingLetters,
                        "node " + std::to_string(x) +
                            " has two children with first letter '" +
                            std::string(1, letter[c]) + "'",
                        line_of(c));
      }
      seen[ch] = true;
      if (letter[c] == kTerminator && degree[c] != 0) {
        throw TreeError(TreeErrorCode::kReservedLetter,
                        "'$' starts the internal edge into node " +
                            std::to_string(c),
                        line_of(c));
      }
    }
    if (x == kRoot) continue;
    const NodeId link = suffix_link[i];
    if (deg == 0) {
      if (link != kNoNode) {
        throw TreeError(TreeErrorCode::kLinkOnLeaf,
                        "leaf " + std::to_string(x) + " has a suffix link");
      }
    } else if (link != kNoNode) {
      if (!in_range(link)) {
        throw TreeError(TreeErrorCode::kDanglingNode,
                        "suffix link of node " + std::to_string(x) +
                            " points outside the tree");
      }
      if (link != kRoot && degree[link] == 0) {
        throw TreeError(TreeErrorCode::kLinkTarget,
                        "suffix link of node " + std::to_string(x) +
                            " points to a leaf");
      }
    }
  }

  t.parent_ = std::move(parent);
  t.letter_ = std::move(letter);
  t.link_ = std::move(suffix_link);
  t.index();
  if (t.preorder_.size() != n) {
    throw TreeError(TreeErrorCode::kNotATree,
                    "not every node is reachable from the root");
  }
  return t;
}

void AnnotatedTree::index() {
  const std::size_t n = parent_.size();
  preorder_.clear();
  preorder_.reserve(n);
  pre_index_.assign(n, -1);
  subtree_size_.assign(n, 1);
  tree_depth_.assign(n, 0);
  top_.assign(n, kNoNode);
  leaf_count_ = 0;
  has_terminator_ = false;

  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (pre_index_[x] >= 0) continue;  // cycle guard for malformed input
    pre_index_[x] = static_cast<std::int32_t>(preorder_.size());
    preorder_.push_back(x);
    const auto kids = children(x);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      const NodeId c = *it;
      tree_depth_[c] = tree_depth_[x] + 1;
      top_[c] = x == kRoot ? c : top_[x];
      stack.push_back(c);
    }
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    const NodeId x = *it;
    if (x != kRoot) subtree_size_[parent_[x]] += subtree_size_[x];
    if (is_leaf(x)) ++leaf_count_;
    if (x != kRoot && letter_[x] == kTerminator) has_terminator_ = true;
  }
}

NodeId AnnotatedTree::child_by_letter(NodeId x, char c) const {
  for (NodeId child : children(x)) {
    if (letter_[child] == c) return child;
  }
  return kNoNode;
}

}  // namespace sufficere
