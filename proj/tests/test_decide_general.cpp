// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sufficere/decide_dollar.hpp"
#include "sufficere/decide_general.hpp"
#include "sufficere/oracle.hpp"
#include "sufficere/suffix_tree.hpp"

namespace sufficere {
namespace {

using testing::load_fixture;
using testing::standard_corpus;

struct Passes {
  std::vector<SLocation> locations;
  Step1Result step1;
  std::vector<SLocation> survivors;
};

Passes run_passes(const DecisionContext& ctx, const SuffixLinkTree& slt) {
  Passes out;
  out.locations = enumerate_locations(ctx);
  out.step1 = step1_filter(ctx, out.locations);
  if (out.step1.rejection) return out;
  std::vector<SLocation> reachable;
  for (SLocation loc : out.step1.survivors) {
    if (slt.reachable(loc)) reachable.push_back(loc);
  }
  auto s3 = step3_filter(ctx, step2_filter(ctx, slt, reachable),
                         out.step1.deepest_negative);
  if (s3) out.survivors = std::move(*s3);
  return out;
}

bool contains(const std::vector<SLocation>& v, SLocation loc) {
  return std::find(v.begin(), v.end(), loc) != v.end();
}

// A location works if hanging the '$'-leaves from it, with any child of p
// as the twist node, gives a '$'-tree.
bool works(const DecisionContext& ctx, const SuffixLinkTree& slt,
           SLocation loc) {
  if (!slt.reachable(loc)) return false;
  std::vector<std::optional<NodeId>> twists{std::nullopt};
  if (slt.needs_twist(loc)) {
    twists.clear();
    for (NodeId c : ctx.tree->children(slt.first_explicit(loc))) {
      twists.push_back(c);
    }
  }
  for (const auto& twist : twists) {
    try {
      if (decide_dollar(augment(ctx, slt, loc, twist)).is_suffix_tree) {
        return true;
      }
    } catch (const AugmentError&) {
    }
  }
  return false;
}

// Annotated ids of forward-tree nodes (canonical preorder).
std::vector<NodeId> annotated_ids(const SuffixTree& st) {
  std::vector<NodeId> id(st.size(), kNoNode);
  NodeId next = 0;
  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    id[x] = next++;
    const auto& kids = st.node(x).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back(it->second);
    }
  }
  return id;
}

// Where the deepest '$'-leaf of s$ hangs, read off the forward tree of s:
// the first suffix that does not end at a leaf.
SLocation true_location(const SuffixTree& st) {
  const std::vector<NodeId> id = annotated_ids(st);
  for (SuffixLocation loc : st.suffix_chain()) {
    if (loc.is_explicit() && st.is_leaf(loc.node)) continue;
    return loc.is_explicit() ? SLocation::at(id[loc.node])
                             : SLocation::above(id[loc.node]);
  }
  return SLocation::at(kRoot);
}

std::int32_t min_leaf_edge(const SuffixTree& st) {
  std::int32_t m = INT32_MAX;
  for (NodeId x = 1; x < static_cast<NodeId>(st.size()); ++x) {
    if (st.is_leaf(x)) m = std::min(m, st.edge_length(x));
  }
  return m;
}

TEST(DecideSuffixTree, Abaabab) {
  const AnnotatedTree t = load_fixture("abaabab");
  const Verdict v = decide_suffix_tree(t);
  ASSERT_TRUE(v.is_suffix_tree);
  EXPECT_TRUE(realizes(v.realizer, t));
  EXPECT_LE(v.realizer.size(), t.size() - 1);
}

TEST(DecideSuffixTree, SelfParentLink) {
  const Verdict v = decide_suffix_tree(load_fixture("self_parent_link"));
  EXPECT_FALSE(v.is_suffix_tree);
  EXPECT_EQ(v.reason, Reason::kPreconditionP2);
}

TEST(DecideSuffixTree, TreeOfAbabaa) {
  const AnnotatedTree t = load_fixture("ababaa");
  const Verdict v = decide_suffix_tree(t);
  ASSERT_TRUE(v.is_suffix_tree);
  EXPECT_TRUE(realizes(v.realizer, t));
  ASSERT_TRUE(v.augmented.has_value());
  EXPECT_TRUE(decide_dollar(*v.augmented).is_suffix_tree);
}

TEST(DecideSuffixTree, DollarTreesAreRouted) {
  const Verdict v = decide_suffix_tree(load_fixture("dollar_abaaa"));
  ASSERT_TRUE(v.is_suffix_tree);
  EXPECT_EQ(v.realizer, "abaaa$");
  EXPECT_TRUE(decide_suffix_tree(load_fixture("dollar_ababa")).is_suffix_tree);
}

TEST(DecideSuffixTree, SingleRoot) {
  const Verdict v = decide_suffix_tree(AnnotatedTree());
  ASSERT_TRUE(v.is_suffix_tree);
  EXPECT_EQ(v.realizer, "");
}

TEST(DecideSuffixTree, Stars) {
  for (int k = 1; k <= 6; ++k) {
    const AnnotatedTree t = testing::star(k);
    const Verdict v = decide_suffix_tree(t);
    ASSERT_TRUE(v.is_suffix_tree) << k;
    EXPECT_TRUE(realizes(v.realizer, t)) << k;
  }
}

TEST(DecideSuffixTree, RejectionReasons) {
  struct Case {
    const char* fixture;
    Reason reason;
  };
  for (const Case& c : {Case{"d_le_minus2", Reason::kDLeMinus2},
                        Case{"neg_d_not_ancestors", Reason::kNegDNotAncestors},
                        Case{"no_survivor", Reason::kNoSurvivor}}) {
    const AnnotatedTree t = load_fixture(c.fixture);
    ASSERT_TRUE(validate_preconditions(t).ok()) << c.fixture;
    const Verdict v = decide_suffix_tree(t);
    EXPECT_FALSE(v.is_suffix_tree) << c.fixture;
    EXPECT_EQ(v.reason, c.reason) << c.fixture;
    EXPECT_FALSE(oracle_decide(t).has_value()) << c.fixture;
  }
}

TEST(DecideSuffixTree, Trace) {
  const AnnotatedTree t = load_fixture("ababaa");
  const Verdict v = decide_suffix_tree(t, DecideOptions{true, true});
  ASSERT_TRUE(v.is_suffix_tree);
  const DecisionContext ctx(t);
  EXPECT_EQ(v.trace.size(), enumerate_locations(ctx).size());
  const auto accepted =
      std::count_if(v.trace.begin(), v.trace.end(), [](const LocationTrace& e) {
        return e.stage == Stage::kAccepted;
      });
  EXPECT_EQ(accepted, 1);
  EXPECT_TRUE(decide_suffix_tree(t).trace.empty());
}

TEST(DecideSuffixTree, CorpusRoundTrip) {
  for (const auto& s : standard_corpus()) {
    const AnnotatedTree t = to_annotated(build_suffix_tree(s));
    const Verdict v = decide_suffix_tree(t);
    ASSERT_TRUE(v.is_suffix_tree) << s;
    ASSERT_TRUE(v.location.has_value() || s.empty()) << s;
  }
}

TEST(DecideSuffixTree, AgreesWithOracleOnMutants) {
  for (const auto& m : testing::mutated_corpus(400, 10, 5)) {
    const Verdict v = decide_suffix_tree(m.tree);
    ASSERT_EQ(v.is_suffix_tree, oracle_decide(m.tree).has_value())
        << serialize_tree(m.tree);
  }
}

TEST(EnumerateLocations, TreeOfAbabaa) {
  const AnnotatedTree t = load_fixture("ababaa");
  const DecisionContext ctx(t);
  const std::vector<SLocation> locs = enumerate_locations(ctx);
  // Internal nodes 0, 1, 3, 6; the edges into 3 (a -> aba) and 6 (root ->
  // ba) have length 2; five leaf edges.
  const std::size_t want = 4 + 2 + 5;
  EXPECT_EQ(locs.size(), want);
  EXPECT_TRUE(contains(locs, SLocation::above(3)));
  EXPECT_TRUE(contains(locs, SLocation::above(6)));
  EXPECT_FALSE(contains(locs, SLocation::above(1)));
  EXPECT_EQ(locs.front(), SLocation::at(kRoot));
  for (std::size_t i = 1; i < locs.size(); ++i) {
    EXPECT_LE(ctx.string_depth(locs[i - 1]), ctx.string_depth(locs[i]));
  }
}

TEST(EnumerateLocations, CountMatchesEdgeLengths) {
  for (const auto& s : testing::all_strings("abc", 6)) {
    const SuffixTree st = build_suffix_tree(s);
    const AnnotatedTree t = to_annotated(st);
    std::size_t want = 0;
    for (NodeId x = 0; x < static_cast<NodeId>(st.size()); ++x) {
      if (!st.is_leaf(x)) ++want;
      // Leaf edges count as unbounded.
      if (x != kRoot && (st.is_leaf(x) || st.edge_length(x) >= 2)) ++want;
    }
    ASSERT_EQ(enumerate_locations(DecisionContext(t)).size(), want) << s;
  }
}

TEST(SuffixLinkTree, DollarTreeOfAbaaa) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  const DecisionContext ctx(t);
  const SuffixLinkTree slt(ctx);
  const std::vector<SLocation> want{SLocation::at(4), SLocation::at(2),
                                    SLocation::at(kRoot)};
  EXPECT_EQ(slt.path(SLocation::at(4)), want);
  EXPECT_FALSE(slt.needs_twist(SLocation::at(4)));
  EXPECT_EQ(slt.first_explicit(SLocation::at(4)), 4);
}

TEST(SuffixLinkTree, ImplicitPointFollowsParentLink) {
  const SuffixTree st = build_suffix_tree("abaababaababaa");
  const AnnotatedTree t = to_annotated(st);
  const DecisionContext ctx(t);
  const SuffixLinkTree slt(ctx);
  const NodeId a = t.child_by_letter(kRoot, 'a');
  const NodeId aba = t.child_by_letter(a, 'b');
  const NodeId ba = t.child_by_letter(kRoot, 'b');
  ASSERT_EQ(t.suffix_link(a), kRoot);
  ASSERT_GE(ctx.depths.edge_length(t, aba), 2);
  // One below a on the way to aba is "ab"; its suffix "b" lies on the edge
  // from the root to ba.
  const auto next = slt.next(SLocation::above(aba));
  ASSERT_TRUE(next.has_value());
  const SLocation want = ctx.depths.depth[ba] >= 2 ? SLocation::above(ba)
                                                   : SLocation::at(ba);
  EXPECT_EQ(*next, want);
  EXPECT_EQ(slt.path(SLocation::above(aba)).back(), SLocation::at(kRoot));
}

TEST(SuffixLinkTree, PathsMatchLabels) {
  // Every point on a path is one letter shorter than the previous one.
  for (const auto& s : testing::all_strings("ab", 9)) {
    const AnnotatedTree t = to_annotated(build_suffix_tree(s));
    const DecisionContext ctx(t);
    const SuffixLinkTree slt(ctx);
    for (SLocation loc : enumerate_locations(ctx)) {
      const auto path = slt.path(loc);
      if (path.empty()) continue;
      ASSERT_EQ(static_cast<std::int32_t>(path.size()),
                ctx.string_depth(loc) + 1)
          << s << " " << to_string(loc);
    }
  }
}

TEST(Step1, SurvivorsStayBelowDeepestNegative) {
  int seen = 0;
  for (const auto& s : standard_corpus()) {
    const AnnotatedTree t = to_annotated(build_suffix_tree(s));
    const DecisionContext ctx(t);
    const Step1Result r = step1_filter(ctx, enumerate_locations(ctx));
    ASSERT_FALSE(r.rejection.has_value()) << s;
    if (!r.deepest_negative) continue;
    ++seen;
    const NodeId x = *r.deepest_negative;
    EXPECT_EQ(ctx.ld.d[x], -1);
    for (SLocation loc : r.survivors) {
      ASSERT_TRUE(t.is_ancestor(x, loc.node)) << s << " " << to_string(loc);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Step1, NoNegativeKeepsEverything) {
  const AnnotatedTree t = load_fixture("ababaa");
  const DecisionContext ctx(t);
  const auto locs = enumerate_locations(ctx);
  const Step1Result r = step1_filter(ctx, locs);
  EXPECT_FALSE(r.deepest_negative.has_value());
  EXPECT_EQ(r.survivors, locs);
}

TEST(Passes, TrueLocationSurvives) {
  int twisted = 0;
  for (const auto& s : standard_corpus()) {
    if (s.empty()) continue;
    // Trim so that implicit suffixes sit one below an explicit node.
    const SuffixTree full = build_suffix_tree(s);
    const std::string trimmed = s.substr(0, s.size() - (min_leaf_edge(full) - 1));
    const SuffixTree st = build_suffix_tree(trimmed);
    const AnnotatedTree t = to_annotated(st);
    const DecisionContext ctx(t);
    const SuffixLinkTree slt(ctx);
    const SLocation loc = true_location(st);
    const Passes p = run_passes(ctx, slt);
    ASSERT_TRUE(contains(p.survivors, loc)) << trimmed << " " << to_string(loc);

    const AnnotatedTree want = to_annotated(build_suffix_tree(trimmed, true));
    std::vector<std::optional<NodeId>> twists{std::nullopt};
    if (slt.needs_twist(loc)) {
      ++twisted;
      twists.clear();
      for (NodeId c : twist_candidates(ctx, slt, loc)) twists.push_back(c);
    }
    bool rebuilt = false;
    for (const auto& twist : twists) {
      try {
        rebuilt = rebuilt || canonical_equal(augment(ctx, slt, loc, twist), want);
      } catch (const AugmentError&) {
      }
    }
    ASSERT_TRUE(rebuilt) << trimmed << " " << to_string(loc);
  }
  EXPECT_GT(twisted, 0);
}

TEST(Passes, SurvivorsAreExactlyWorkingLocations) {
  std::vector<AnnotatedTree> trees;
  for (const auto& s : standard_corpus()) {
    trees.push_back(to_annotated(build_suffix_tree(s)));
  }
  for (auto& m : testing::mutated_corpus(1000, 12, 9)) {
    if (validate_preconditions(m.tree).ok()) trees.push_back(std::move(m.tree));
  }
  for (const AnnotatedTree& t : trees) {
    const DecisionContext ctx(t);
    const SuffixLinkTree slt(ctx);
    const Passes p = run_passes(ctx, slt);
    for (SLocation loc : p.locations) {
      ASSERT_EQ(contains(p.survivors, loc), works(ctx, slt, loc))
          << serialize_tree(t) << to_string(loc);
    }
  }
}

TEST(Augment, TreeOfAbabaa) {
  const AnnotatedTree t = load_fixture("ababaa");
  const DecisionContext ctx(t);
  const SuffixLinkTree slt(ctx);
  const AnnotatedTree a = augment(ctx, slt, SLocation::at(1), std::nullopt);
  EXPECT_TRUE(canonical_equal(a, to_annotated(build_suffix_tree("ababaa", true))));
  const Verdict v = decide_dollar(a);
  ASSERT_TRUE(v.is_suffix_tree);
  EXPECT_EQ(v.realizer, "ababaa$");
}

TEST(Augment, TreeOfAbaabab) {
  const SuffixTree st = build_suffix_tree("abaabab");
  const AnnotatedTree t = to_annotated(st);
  const DecisionContext ctx(t);
  const SuffixLinkTree slt(ctx);
  const SLocation loc = true_location(st);
  std::optional<NodeId> twist;
  if (slt.needs_twist(loc)) twist = twist_candidates(ctx, slt, loc).front();
  EXPECT_TRUE(canonical_equal(augment(ctx, slt, loc, twist),
                              to_annotated(build_suffix_tree("abaabab", true))));
}

TEST(Augment, RequiresTwistWhenPathLeavesLeafEdge) {
  for (const auto& s : testing::all_strings("ab", 8)) {
    const AnnotatedTree t = to_annotated(build_suffix_tree(s));
    const DecisionContext ctx(t);
    const SuffixLinkTree slt(ctx);
    for (SLocation loc : enumerate_locations(ctx)) {
      if (!slt.reachable(loc) || !slt.needs_twist(loc)) continue;
      EXPECT_THROW(augment(ctx, slt, loc, std::nullopt), AugmentError) << s;
    }
  }
}

}  // namespace
}  // namespace sufficere
