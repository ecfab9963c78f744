// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Recognition of general suffix trees (suffixes may end inside the tree).
//
// The tree is a suffix tree iff it can be extended into a '$'-suffix tree by
// hanging '$'-leaves along one suffix-link path. The path is fixed by where
// the deepest '$'-leaf s hangs, and there are O(n) candidate places for s.
// Three linear passes cross out candidates whose extension would break the
// suffix tour graph; any survivor is extended and handed to decide_dollar.

#ifndef SUFFICERE_DECIDE_GENERAL_HPP_
#define SUFFICERE_DECIDE_GENERAL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sufficere/stg.hpp"
#include "sufficere/tree.hpp"
#include "sufficere/verdict.hpp"

namespace sufficere {

/// Per-tree data shared by the passes. Requires P1 and P2.
struct DecisionContext {
  explicit DecisionContext(const AnnotatedTree& t);

  const AnnotatedTree* tree;
  StringDepths depths;
  LDValues ld;
  /// Letter one position below the upper end of the internal edge into x,
  /// for internal edges of length >= 2; 0 otherwise.
  std::vector<char> second_letter;

  /// Edge length into x; leaf edges count as unbounded.
  bool edge_at_least_two(NodeId x) const;
  /// Deepest original node above s (inclusive) for a location.
  NodeId anchor(SLocation loc) const;
  /// String depth of the point s hangs from.
  std::int32_t string_depth(SLocation loc) const;
};

/// Every internal node (the root included) and, at offset one, every leaf
/// edge and every internal edge of length >= 2. Ordered by string depth,
/// then node id, explicit before implicit.
std::vector<SLocation> enumerate_locations(const DecisionContext& ctx);

/// Suffix-link successors of all candidate points, with the first explicit
/// node p of each path and whether the implicit point just before p lies on
/// a leaf edge (then a twist node below p is needed).
class SuffixLinkTree {
 public:
  explicit SuffixLinkTree(const DecisionContext& ctx);

  /// False if some point on the path is missing from the tree.
  bool reachable(SLocation loc) const { return first_explicit(loc) >= 0; }
  NodeId first_explicit(SLocation loc) const { return p_[slot(loc)]; }
  bool needs_twist(SLocation loc) const { return twist_[slot(loc)] != 0; }
  std::optional<SLocation> next(SLocation loc) const;

  /// The points from loc to the root, both included. Empty if unreachable.
  std::vector<SLocation> path(SLocation loc) const;

 private:
  static constexpr std::int32_t kEnd = -1;
  static constexpr std::int32_t kMissing = -2;

  std::size_t slot(SLocation loc) const {
    return static_cast<std::size_t>(loc.node) +
           (loc.is_explicit() ? 0 : n_);
  }
  SLocation location(std::int32_t slot) const;

  std::size_t n_ = 0;
  std::vector<std::int32_t> next_;
  std::vector<NodeId> p_;
  std::vector<char> twist_;
};

struct Step1Result {
  std::optional<Reason> rejection;
  /// Deepest node with d = -1, if any.
  std::optional<NodeId> deepest_negative;
  std::vector<SLocation> survivors;
};

/// Negative d values: none below -2, and those equal to -1 on one root path.
Step1Result step1_filter(const DecisionContext& ctx,
                         const std::vector<SLocation>& locations);

/// Children of p that can serve as the twist node for loc, preferred first:
/// the child above s when d >= 0, then children with d > 0 by letter.
std::vector<NodeId> twist_candidates(const DecisionContext& ctx,
                                     const SuffixLinkTree& slt,
                                     SLocation loc);

/// Drops unreachable locations and those needing a twist node that p lacks:
/// a child t with d(t) > 0, or d(t) = 0 with t above s. A location inside
/// the edge into a child t of p counts as below t.
std::vector<SLocation> step2_filter(const DecisionContext& ctx,
                                    const SuffixLinkTree& slt,
                                    const std::vector<SLocation>& survivors);

/// Keeps locations whose root path touches every component of the suffix
/// tour graph (with the forced path to the deepest negative node added)
/// that contains a leaf. For a location inside the edge into v, the path
/// also reaches v when ℓ(v) > 0 or d(v) > 0. nullopt if the graph is not
/// Eulerian.
std::optional<std::vector<SLocation>> step3_filter(
    const DecisionContext& ctx, const std::vector<SLocation>& survivors,
    std::optional<NodeId> deepest_negative);

class AugmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hangs a '$'-leaf on every point of the suffix-link path of loc, making
/// implicit points explicit. Lower parts of split leaf edges get the twist
/// node's letter, or the hidden letter of the next split internal edge.
/// Throws AugmentError if the result is not a well-formed tree.
AnnotatedTree augment(const DecisionContext& ctx, const SuffixLinkTree& slt,
                      SLocation loc, std::optional<NodeId> twist);

struct DecideOptions {
  /// Rebuild the suffix tree of the answer and compare it with the input.
  bool verify = true;
  /// Record the fate of every candidate location in Verdict::trace.
  bool trace = false;
};

/// Trees with '$' edges are decided as '$'-trees.
Verdict decide_suffix_tree(const AnnotatedTree& tree, DecideOptions options = {});

}  // namespace sufficere

#endif  // SUFFICERE_DECIDE_GENERAL_HPP_
