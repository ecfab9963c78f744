// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "sufficere/stg.hpp"
#include "sufficere/suffix_tree.hpp"

namespace sufficere {
namespace {

using testing::load_fixture;
using testing::standard_corpus;

using Pairs = std::vector<std::pair<std::int32_t, std::int32_t>>;

Pairs ld_pairs(const LDValues& ld) {
  Pairs out;
  for (std::size_t x = 0; x < ld.ell.size(); ++x) {
    out.emplace_back(ld.ell[x], ld.d[x]);
  }
  return out;
}

// ℓ + d is 1 at a leaf and the sum of the children's d elsewhere.
void expect_ld_identity(const AnnotatedTree& t, const LDValues& ld,
                        const std::string& what) {
  for (NodeId x = 0; x < static_cast<NodeId>(t.size()); ++x) {
    std::int32_t below = 0;
    for (NodeId c : t.children(x)) below += ld.d[c];
    const std::int32_t want = t.is_leaf(x) ? 1 : below;
    ASSERT_EQ(ld.ell[x] + ld.d[x], want) << what << " node " << x;
  }
}

// Degree tally straight from the definition, without the graph class.
void expect_balanced_by_hand(const AnnotatedTree& t, const LDValues& ld,
                             const std::string& what) {
  std::vector<std::int64_t> in(t.size(), 0);
  std::vector<std::int64_t> out(t.size(), 0);
  for (NodeId x = 1; x < static_cast<NodeId>(t.size()); ++x) {
    const std::int64_t k = ld.d[x];
    const NodeId p = t.parent(x);
    if (k > 0) {
      out[p] += k;
      in[x] += k;
    } else {
      in[p] -= k;
      out[x] -= k;
    }
    if (t.is_leaf(x)) {
      ++out[x];
      ++in[leaf_target(t, x)];
    }
  }
  ASSERT_EQ(in, out) << what;
}

TEST(ComputeLd, DollarTreeOfAbaaa) {
  const LDValues ld = compute_ld(load_fixture("dollar_abaaa"));
  const Pairs want{{2, 0}, {1, 0}, {0, 2}, {1, 0}, {1, 1},
                   {0, 1}, {0, 1}, {0, 1}, {1, 0}};
  EXPECT_EQ(ld_pairs(ld), want);
}

TEST(ComputeLd, TreeOfAbabaa) {
  const LDValues ld = compute_ld(load_fixture("ababaa"));
  const Pairs want{{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1},
                   {0, 1}, {0, 0}, {1, 0}, {1, 0}};
  EXPECT_EQ(ld_pairs(ld), want);
}

TEST(ComputeLd, IdentityOnFixtures) {
  for (const char* name :
       {"dollar_ababa", "abaabab", "dollar_abaaa", "ababaa"}) {
    const AnnotatedTree t = load_fixture(name);
    expect_ld_identity(t, compute_ld(t), name);
  }
}

TEST(ComputeLd, IdentityOnCorpus) {
  for (const auto& s : standard_corpus()) {
    for (bool dollar : {false, true}) {
      const AnnotatedTree t = to_annotated(build_suffix_tree(s, dollar));
      expect_ld_identity(t, compute_ld(t), s);
    }
  }
}

TEST(LeafTarget, DollarTreeOfAbaaa) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  // aa$ -> a$ -> $ -> root
  EXPECT_EQ(leaf_target(t, 5), 3);
  EXPECT_EQ(leaf_target(t, 3), 1);
  EXPECT_EQ(leaf_target(t, 1), kRoot);
  EXPECT_EQ(leaf_target(t, 6), 4);
  EXPECT_EQ(leaf_target(t, 7), 8);
  EXPECT_EQ(leaf_target(t, 8), kRoot);
}

TEST(BuildStg, TreeOfAbabaa) {
  const AnnotatedTree t = load_fixture("ababaa");
  const SuffixTourGraph g = build_stg(t);
  EXPECT_EQ(g.multiplicity(1), 0);  // root -> a
  EXPECT_EQ(g.multiplicity(3), 1);  // a -> ab, once
  EXPECT_EQ(g.multiplicity(4), 1);
  EXPECT_EQ(g.multiplicity(5), 1);
  EXPECT_EQ(g.multiplicity(6), 0);
  EXPECT_EQ(g.leaf_arc(8), 3);  // bb -> ab
  EXPECT_EQ(g.leaf_arc(7), 2);  // ba -> aa
  EXPECT_EQ(g.leaf_arc(4), 7);  // aba -> ba
  EXPECT_EQ(g.leaf_arc(5), 8);  // abb -> bb
  EXPECT_EQ(g.leaf_arc(2), 1);  // aa -> a
  EXPECT_EQ(g.leaf_arc(3), kNoNode);
  EXPECT_EQ(g.arc_count(), 8);
}

TEST(BuildStg, NegativeMultiplicityPointsUp) {
  AnnotatedTree t = load_fixture("ababaa");
  SuffixTourGraph g = build_stg(t);
  g.add_tree_arcs(6, -2);
  EXPECT_EQ(g.multiplicity(6), -2);
  EXPECT_EQ(g.out_degrees(t)[6], 2);
  EXPECT_EQ(g.in_degrees(t)[kRoot], 2);
}

TEST(BuildStg, MissingTargetThrows) {
  // σ(ab) = b, but b has no child starting with 'a'.
  const AnnotatedTree t = parse_tree(
      "nodes 9\nedge 0 1 a\nedge 1 2 a\nedge 1 3 b\nedge 3 4 a\nedge 3 5 b\n"
      "edge 0 6 b\nedge 6 7 b\nedge 6 8 $\nslink 1 0\nslink 3 6\n"
      "slink 6 0\n");
  EXPECT_EQ(leaf_target(t, 4), kNoNode);
  try {
    build_stg(t);
    FAIL() << "expected NoMatchingChild";
  } catch (const NoMatchingChild& e) {
    EXPECT_EQ(e.leaf(), 4);
  }
}

TEST(IsEulerian, FixtureGraphs) {
  for (const char* name :
       {"dollar_ababa", "abaabab", "dollar_abaaa", "ababaa"}) {
    const AnnotatedTree t = load_fixture(name);
    const LDValues ld = compute_ld(t);
    EXPECT_TRUE(is_eulerian(build_stg(t, ld), t)) << name;
    expect_balanced_by_hand(t, ld, name);
  }
}

TEST(IsEulerian, CorpusGraphs) {
  for (const auto& s : standard_corpus()) {
    for (bool dollar : {false, true}) {
      const AnnotatedTree t = to_annotated(build_suffix_tree(s, dollar));
      const LDValues ld = compute_ld(t);
      ASSERT_TRUE(is_eulerian(build_stg(t, ld), t)) << s;
      expect_balanced_by_hand(t, ld, s);
    }
  }
}

TEST(IsEulerian, UnbalancedGraph) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  SuffixTourGraph g = build_stg(t);
  g.add_tree_arcs(2, 1);
  EXPECT_FALSE(is_eulerian(g, t));
}

TEST(EulerTour, DollarTreeOfAbaaa) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  const auto s = euler_tour_string(build_stg(t), t);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, "abaaa$");
}

TEST(EulerTour, TreeOfAbabaaMissesLeaves) {
  const AnnotatedTree t = load_fixture("ababaa");
  EXPECT_FALSE(euler_tour_string(build_stg(t), t).has_value());
}

TEST(EulerTour, RealizesCorpusDollarTrees) {
  for (const auto& s : standard_corpus()) {
    const AnnotatedTree t = to_annotated(build_suffix_tree(s, true));
    const auto out = euler_tour_string(build_stg(t), t);
    ASSERT_TRUE(out.has_value()) << s;
    ASSERT_EQ(out->size(), s.size() + 1) << s;
    ASSERT_EQ(out->back(), '$');
    ASSERT_TRUE(realizes(*out, t)) << s << " -> " << *out;
  }
}

TEST(ToDot, DollarTreeOfAbaaa) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  const std::string dot = to_dot(build_stg(t), t);
  EXPECT_EQ(dot.rfind("digraph stg {", 0), 0u);
  EXPECT_NE(dot.find("n5 [label=\"5\", style=filled]"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n4 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("n5 -> n3 [style=dashed]"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(FormatLdTable, DollarTreeOfAbaaa) {
  const AnnotatedTree t = load_fixture("dollar_abaaa");
  const std::string table = format_ld_table(t, compute_ld(t));
  EXPECT_EQ(table.rfind("0 internal l=2 d=0\n", 0), 0u);
  EXPECT_NE(table.find("4 internal l=1 d=1\n"), std::string::npos);
  EXPECT_NE(table.find("8 leaf l=1 d=0\n"), std::string::npos);
}

}  // namespace
}  // namespace sufficere
