// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Suffix tour graphs.
//
// Every leaf y of a suffix tree points, through the suffix link of its
// parent and the first letter of its edge, at the subtree that must contain
// the next leaf of the suffix chain. ℓ(x) counts the leaves pointing at x;
// d(x) = |leaves under x| - Σ ℓ over the subtree of x is the number of times
// the chain must enter x's subtree through the edge above x. The suffix tour
// graph combines d-weighted tree arcs with the leaf pointers; an Euler cycle
// through the root and all leaves spells a realizing string.

#ifndef SUFFICERE_STG_HPP_
#define SUFFICERE_STG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sufficere/tree.hpp"

namespace sufficere {

/// ℓ and d per node. ⊥ is not stored; by convention ℓ(⊥) = 0.
struct LDValues {
  std::vector<std::int32_t> ell;
  std::vector<std::int32_t> d;
};

/// Node a leaf points at: the child of σ(parent(y)) whose edge starts with
/// λ(parent(y) → y); the root when parent(y) is the root (the ⊥ → root edge
/// matches every letter). kNoNode if σ(parent(y)) is undefined or has no
/// such child.
NodeId leaf_target(const AnnotatedTree& tree, NodeId leaf);

/// Leaves with no target contribute to no ℓ value.
LDValues compute_ld(const AnnotatedTree& tree);

/// Thrown by build_stg when a leaf has no target (precondition P2 fails).
class NoMatchingChild : public std::runtime_error {
 public:
  explicit NoMatchingChild(NodeId leaf);
  NodeId leaf() const noexcept { return leaf_; }

 private:
  NodeId leaf_;
};

class SuffixTourGraph {
 public:
  SuffixTourGraph() = default;
  SuffixTourGraph(const AnnotatedTree& tree, const LDValues& ld);

  std::size_t size() const noexcept { return multiplicity_.size(); }

  /// Signed multiplicity of the tree edge into x: k > 0 means k arcs
  /// parent(x) → x, k < 0 means |k| arcs x → parent(x). 0 for the root.
  std::int64_t multiplicity(NodeId x) const { return multiplicity_[x]; }
  /// Target of the leaf's suffix-link arc; kNoNode for internal nodes.
  NodeId leaf_arc(NodeId x) const { return leaf_arc_[x]; }

  /// Adds k arcs parent(x) → x. Opposite arcs cancel pairwise.
  void add_tree_arcs(NodeId x, std::int64_t k) { multiplicity_[x] += k; }

  std::int64_t arc_count() const;
  std::vector<std::int64_t> in_degrees(const AnnotatedTree& tree) const;
  std::vector<std::int64_t> out_degrees(const AnnotatedTree& tree) const;

 private:
  std::vector<std::int64_t> multiplicity_;
  std::vector<NodeId> leaf_arc_;
};

/// Throws NoMatchingChild if a leaf arc cannot be resolved.
SuffixTourGraph build_stg(const AnnotatedTree& tree);
SuffixTourGraph build_stg(const AnnotatedTree& tree, const LDValues& ld);

/// In-degree equals out-degree everywhere (the graph may be disconnected).
bool is_eulerian(const SuffixTourGraph& g, const AnnotatedTree& tree);

/// Follows an Euler cycle of the root's component (Hierholzer; at every node
/// arcs into children go first by increasing letter, then the reversed arc to
/// the parent, then the leaf's own arc) and spells one letter per leaf: the
/// first letter below the root on the way to that leaf. When the root has a
/// child leaf labelled `terminator`, the cycle is rotated so that this leaf
/// comes last. Returns nullopt when the root's component misses a leaf.
///
/// Precondition: is_eulerian(g, tree).
std::optional<std::string> euler_tour_string(const SuffixTourGraph& g,
                                             const AnnotatedTree& tree,
                                             char terminator = kTerminator);

/// Graphviz rendering: leaves filled, tree arcs solid and labelled with their
/// multiplicity, leaf suffix-link arcs dashed. Node names are "n<id>".
std::string to_dot(const SuffixTourGraph& g, const AnnotatedTree& tree);

/// One line per node: "<id> <kind> l=<ℓ> d=<d>".
std::string format_ld_table(const AnnotatedTree& tree, const LDValues& ld);

}  // namespace sufficere

#endif  // SUFFICERE_STG_HPP_
