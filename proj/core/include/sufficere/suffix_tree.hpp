// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Forward construction of suffix trees of arbitrary strings ("implicit" or
// "extended" suffix trees, where a suffix may end inside the tree) and of
// $-terminated strings. These trees are the ground truth for the deciders.

#ifndef SUFFICERE_SUFFIX_TREE_HPP_
#define SUFFICERE_SUFFIX_TREE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sufficere/tree.hpp"

namespace sufficere {

/// Where a suffix ends: at the explicit node `node` (offset 0), or strictly
/// inside the edge into `node`, `offset` characters below its upper end.
struct SuffixLocation {
  NodeId node = kRoot;
  std::int32_t offset = 0;

  bool is_explicit() const noexcept { return offset == 0; }
  friend bool operator==(const SuffixLocation&,
                         const SuffixLocation&) = default;
};

class SuffixTree {
 public:
  struct Node {
    NodeId parent = kBot;
    /// Edge label is text[start, end).
    std::int32_t start = 0;
    std::int32_t end = 0;
    std::int32_t depth = 0;
    NodeId link = kNoNode;
    /// (first letter, child), sorted by letter.
    std::vector<std::pair<char, NodeId>> children;
  };

  /// The indexed text, including the appended '$' when built with one.
  const std::string& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(NodeId x) const { return nodes_[x]; }

  bool is_leaf(NodeId x) const {
    return x != kRoot && nodes_[x].children.empty();
  }
  std::int32_t edge_length(NodeId x) const {
    return nodes_[x].end - nodes_[x].start;
  }
  std::string_view edge_label(NodeId x) const {
    return std::string_view(text_).substr(nodes_[x].start, edge_length(x));
  }
  /// The full label of x (root to x).
  std::string label(NodeId x) const;
  NodeId child(NodeId x, char c) const;

  /// Suffix chain: entry i is the location of text[i..]; the last entry
  /// (i = |text|) is the root.
  std::span<const SuffixLocation> suffix_chain() const noexcept {
    return chain_;
  }

  /// Location of an arbitrary substring; throws std::invalid_argument if the
  /// string does not occur.
  SuffixLocation locate(std::string_view s) const;

  /// Deepest explicit node above a location (the node itself when explicit).
  NodeId parent_of(SuffixLocation loc) const;
  std::int32_t string_depth(SuffixLocation loc) const;

 private:
  friend SuffixTree build_suffix_tree(std::string_view, bool);
  friend SuffixTree build_suffix_tree_online(std::string_view, bool);

  void finish();

  std::string text_;
  std::vector<Node> nodes_;
  std::vector<SuffixLocation> chain_;
};

/// Builds the suffix tree of s (of s$ when `dollar`) by inserting suffixes
/// one at a time, O(|s|^2). Suffix links of internal nodes are recovered by
/// locating each label without its first letter.
///
/// '?' is rejected. '$' may only occur as the final character and only when
/// `dollar` is false, so the terminator stays unique. Throws
/// std::invalid_argument.
SuffixTree build_suffix_tree(std::string_view s, bool dollar = false);

/// Same tree, built online in O(|s|) (Ukkonen). Meant for large inputs.
SuffixTree build_suffix_tree_online(std::string_view s, bool dollar = false);

/// Forgets labels and suffix markers: topology, first letters, and suffix
/// links of internal nodes. Nodes are numbered in canonical preorder.
AnnotatedTree to_annotated(const SuffixTree& st);

/// The suffix chain (root excluded) split into its consecutive classes.
struct ChainSegments {
  std::vector<SuffixLocation> leaves;
  std::vector<SuffixLocation> implicit_on_leaf_edges;
  std::vector<SuffixLocation> implicit_on_internal_edges;
  std::vector<SuffixLocation> explicit_internal;
};

enum class ChainClass {
  kLeaf = 0,
  kImplicitOnLeafEdge = 1,
  kImplicitOnInternalEdge = 2,
  kExplicitInternal = 3,
};

ChainClass classify(const SuffixTree& st, SuffixLocation loc);

/// Throws std::logic_error if the chain classes are not in segment order.
ChainSegments suffix_chain_segments(const SuffixTree& st);

/// True iff the suffix tree of s is canonically equal to t. Strings the
/// builder rejects realize nothing.
bool realizes(std::string_view s, const AnnotatedTree& t);

}  // namespace sufficere

#endif  // SUFFICERE_SUFFIX_TREE_HPP_
