// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/decide_dollar.hpp"

#include <algorithm>

#include "sufficere/stg.hpp"
#include "sufficere/suffix_tree.hpp"

namespace sufficere {

Verdict decide_dollar(const AnnotatedTree& tree, DollarOptions options) {
  const ValidationReport report = validate_preconditions(tree);
  if (!report.ok()) {
    const Rule rule = report.first()->rule;
    return Verdict::no(rule == Rule::kP2 ? Reason::kPreconditionP2
                                         : Reason::kPreconditionP1);
  }
  const NodeId end_leaf = tree.child_by_letter(kRoot, kTerminator);
  if (end_leaf == kNoNode || !tree.is_leaf(end_leaf)) {
    return Verdict::no(Reason::kNoDollarShape);
  }

  const LDValues ld = compute_ld(tree);
  if (std::any_of(ld.d.begin(), ld.d.end(), [](auto v) { return v < 0; })) {
    return Verdict::no(Reason::kNegativeD);
  }
  const SuffixTourGraph g = build_stg(tree, ld);
  if (!is_eulerian(g, tree)) return Verdict::no(Reason::kNotEulerian);
  auto s = euler_tour_string(g, tree, kTerminator);
  if (!s) return Verdict::no(Reason::kNoEulerCycle);

  if (options.verify && !realizes(*s, tree)) {
    return Verdict::no(Reason::kVerificationFailed);
  }
  return Verdict::yes(std::move(*s));
}

}  // namespace sufficere
