// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Recognition of '$'-suffix trees: a tree is the suffix tree of some S$ iff
// it satisfies P1 and P2, has no negative d value, and its suffix tour graph
// has a cycle through the root and every leaf.

#ifndef SUFFICERE_DECIDE_DOLLAR_HPP_
#define SUFFICERE_DECIDE_DOLLAR_HPP_

#include "sufficere/tree.hpp"
#include "sufficere/verdict.hpp"

namespace sufficere {

struct DollarOptions {
  /// Rebuild the suffix tree of the answer and compare it with the input.
  bool verify = true;
};

/// YES carries a string ending in '$'. The root must have a leaf child on a
/// '$' edge, otherwise the answer is NO_DOLLAR_SHAPE.
Verdict decide_dollar(const AnnotatedTree& tree, DollarOptions options = {});

}  // namespace sufficere

#endif  // SUFFICERE_DECIDE_DOLLAR_HPP_
