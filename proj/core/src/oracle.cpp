// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/oracle.hpp"

#include <algorithm>
#include <vector>

#include "sufficere/suffix_tree.hpp"

namespace sufficere {

OracleBudgetExceeded::OracleBudgetExceeded(std::int64_t cap)
    : std::runtime_error("BUDGET_EXCEEDED: more than " + std::to_string(cap) +
                         " candidate strings") {}

std::optional<std::string> oracle_decide(const AnnotatedTree& tree,
                                         const OracleOptions& options) {
  std::string alphabet;
  for (NodeId c : tree.children(kRoot)) {
    if (tree.letter(c) != kTerminator) alphabet.push_back(tree.letter(c));
  }
  std::sort(alphabet.begin(), alphabet.end());
  const bool dollar = tree.child_by_letter(kRoot, kTerminator) != kNoNode;
  const std::int64_t extra = dollar ? 1 : 0;

  const auto n = static_cast<std::int64_t>(tree.size());
  const std::int64_t max_len = options.max_len.value_or(n - 1) - extra;
  const std::int64_t min_len = std::max<std::int64_t>(
      options.min_len.value_or(static_cast<std::int64_t>(tree.leaf_count())) -
          extra,
      0);

  std::int64_t steps = 0;
  const auto k = static_cast<std::int64_t>(alphabet.size());
  std::string word;
  for (std::int64_t len = min_len; len <= max_len; ++len) {
    if (k == 0 && len > 0) break;
    // Odometer over alphabet^len in lexicographic order.
    std::vector<std::int64_t> digit(static_cast<std::size_t>(len), 0);
    while (true) {
      if (++steps > options.step_cap) {
        throw OracleBudgetExceeded(options.step_cap);
      }
      word.clear();
      for (std::int64_t i : digit) word.push_back(alphabet[i]);
      if (dollar) word.push_back(kTerminator);
      if (realizes(word, tree)) return word;
      std::int64_t pos = len - 1;
      while (pos >= 0 && digit[pos] == k - 1) digit[pos--] = 0;
      if (pos < 0) break;
      ++digit[pos];
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> minimal_realizer_length(
    const AnnotatedTree& tree, const OracleOptions& options) {
  const auto s = oracle_decide(tree, options);
  if (!s) return std::nullopt;
  return static_cast<std::int64_t>(s->size());
}

}  // namespace sufficere
