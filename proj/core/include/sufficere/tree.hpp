// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Annotated ordered trees: the input of the suffix tree decision problem.
//
// A tree carries its topology, the first letter of every edge, and the
// suffix links of its internal nodes. Node 0 is the root. The auxiliary
// parent of the root (written ⊥ in the literature) is never stored; it is
// represented by the sentinel kBot, which is also the suffix link of the root.

#ifndef SUFFICERE_TREE_HPP_
#define SUFFICERE_TREE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sufficere {

using NodeId = std::int32_t;

inline constexpr NodeId kRoot = 0;
/// The auxiliary parent of the root.
inline constexpr NodeId kBot = -1;
/// Absent node (missing suffix link, leaf suffix link, failed lookup).
inline constexpr NodeId kNoNode = -2;

/// Unique end-of-string symbol. Only ever the first letter of a leaf edge.
inline constexpr char kTerminator = '$';
/// Label of the edge ⊥ → root; matches any letter.
inline constexpr char kWildcard = '?';

/// True for characters allowed as the first letter of a tree edge.
bool is_edge_letter(char c) noexcept;

enum class TreeErrorCode {
  kSyntax,
  kNodeCount,
  kDanglingNode,
  kNotATree,
  kSiblingLetters,
  kUnaryNode,
  kReservedLetter,
  kLinkOnLeaf,
  kLinkTarget,
  kDuplicateLink,
  kRootLink,
  kNonpositiveEdge,
  kMissingLink,
};

std::string_view error_code_name(TreeErrorCode code) noexcept;

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorCode code, const std::string& message, int line = 0,
            int column = 0);

  TreeErrorCode code() const noexcept { return code_; }
  /// 1-based position in the source document, 0 when not parsed from text.
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  TreeErrorCode code_;
  int line_;
  int column_;
};

/// Immutable annotated tree. Children keep their insertion order; every
/// operation that depends on order sorts by first letter itself.
class AnnotatedTree {
 public:
  /// The suffix tree of the empty string: a lone root.
  AnnotatedTree();

  /// Builds a tree from per-node arrays and checks its shape.
  ///
  /// parent[0] must be kBot and letter[0] is ignored (the root's incoming
  /// letter is always the wildcard). suffix_link[x] is kNoNode for leaves and
  /// for internal nodes whose link is unknown; suffix_link[0] is ignored.
  /// Children are ordered by increasing node id. Throws TreeError.
  static AnnotatedTree from_arrays(std::vector<NodeId> parent,
                                   std::vector<char> letter,
                                   std::vector<NodeId> suffix_link);

  std::size_t size() const noexcept { return parent_.size(); }

  NodeId parent(NodeId x) const { return parent_[x]; }
  std::span<const NodeId> children(NodeId x) const {
    return {child_ids_.data() + child_begin_[x],
            child_ids_.data() + child_begin_[x + 1]};
  }
  std::size_t child_count(NodeId x) const {
    return static_cast<std::size_t>(child_begin_[x + 1] - child_begin_[x]);
  }
  /// First letter on the edge parent(x) → x; the wildcard for the root.
  char letter(NodeId x) const { return letter_[x]; }
  /// kBot for the root, kNoNode for leaves and unlinked nodes.
  NodeId suffix_link(NodeId x) const { return link_[x]; }

  /// The root is never a leaf, even when it has no children.
  bool is_leaf(NodeId x) const { return x != kRoot && child_count(x) == 0; }
  bool is_internal(NodeId x) const { return !is_leaf(x); }

  /// Child of x whose edge starts with c, or kNoNode.
  NodeId child_by_letter(NodeId x, char c) const;

  std::size_t leaf_count() const noexcept { return leaf_count_; }
  bool has_terminator() const noexcept { return has_terminator_; }

  /// Nodes in preorder (children visited in stored order).
  const std::vector<NodeId>& preorder() const noexcept { return preorder_; }

  /// O(1) ancestor test over preorder intervals; a node is its own ancestor.
  bool is_ancestor(NodeId ancestor, NodeId node) const {
    return pre_index_[ancestor] <= pre_index_[node] &&
           pre_index_[node] < pre_index_[ancestor] + subtree_size_[ancestor];
  }
  /// Number of edges between x and the root.
  std::int32_t tree_depth(NodeId x) const { return tree_depth_[x]; }
  /// The child of the root whose subtree contains x (x itself for root
  /// children); kNoNode for the root.
  NodeId top(NodeId x) const { return top_[x]; }

  const std::vector<NodeId>& parents() const noexcept { return parent_; }
  const std::vector<char>& letters() const noexcept { return letter_; }
  const std::vector<NodeId>& suffix_links() const noexcept { return link_; }

 private:
  friend AnnotatedTree parse_tree(std::string_view text);

  // Shared constructor for from_arrays and parse_tree. `order` lists the
  // non-root nodes in sibling order; `lines` (optional) maps a node to the
  // source line of its edge for error reporting.
  static AnnotatedTree assemble(std::vector<NodeId> parent,
                                std::vector<char> letter,
                                std::vector<NodeId> suffix_link,
                                const std::vector<NodeId>& order,
                                const std::vector<int>& lines);
  void index();

  std::vector<NodeId> parent_;
  std::vector<char> letter_;
  std::vector<NodeId> link_;
  std::vector<std::int32_t> child_begin_;
  std::vector<NodeId> child_ids_;
  std::vector<NodeId> preorder_;
  std::vector<std::int32_t> pre_index_;
  std::vector<std::int32_t> subtree_size_;
  std::vector<std::int32_t> tree_depth_;
  std::vector<NodeId> top_;
  std::size_t leaf_count_ = 0;
  bool has_terminator_ = false;
};

/// Parses the line-oriented tree format:
///
///   nodes <n>
///   edge <parent-id> <child-id> <first-letter>     (n-1 lines)
///   slink <from-id> <to-id>                        (internal nodes)
///
/// '#' starts a comment. Children are stored in file order. Throws TreeError
/// with the offending line and column.
AnnotatedTree parse_tree(std::string_view text);

/// Canonical document: canonical ids (preorder, children by letter), edges in
/// preorder, suffix links by source id.
std::string serialize_tree(const AnnotatedTree& tree);

/// Preorder of the tree with children visited by increasing first letter.
std::vector<NodeId> canonical_order(const AnnotatedTree& tree);

/// Equality after sorting every child list by first letter; suffix links
/// are compared through the induced node correspondence.
bool canonical_equal(const AnnotatedTree& a, const AnnotatedTree& b);

enum class Rule { kP1, kP2, kSiblingLetters, kShape };

std::string_view rule_name(Rule rule) noexcept;

struct Violation {
  Rule rule;
  NodeId node;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> failures;

  bool ok() const noexcept { return failures.empty(); }
  /// First failure, if any.
  std::optional<Violation> first() const;
};

/// Checks the two structural conditions every suffix tree satisfies.
///
/// P1: the suffix links of every internal node lead to ⊥ without repetition,
/// through internal nodes only, and the string depth they induce (the number
/// of hops to the root) grows strictly along every internal edge.
///
/// P2: for every non-root node x with parent p and y = σ(p), y has a child z
/// with λ(p→x) = λ(y→z), and σ(x) lies in the subtree of z when x is
/// internal. For p = root, y = ⊥ and z = root.
ValidationReport validate_preconditions(const AnnotatedTree& tree);

/// String depths derived from suffix links.
struct StringDepths {
  /// depth[x] for internal x; -1 for leaves, whose depth is not determined.
  std::vector<std::int32_t> depth;

  /// Length of the edge into internal node x (x != root).
  std::int32_t edge_length(const AnnotatedTree& tree, NodeId x) const {
    return depth[x] - depth[tree.parent(x)];
  }
};

/// depth(x) = number of suffix-link hops from x to the root. Throws TreeError
/// (kMissingLink / kNonpositiveEdge) when the links do not define positive
/// internal edge lengths.
StringDepths compute_string_depths(const AnnotatedTree& tree);

}  // namespace sufficere

#endif  // SUFFICERE_TREE_HPP_
