// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive search for realizing strings. A suffix tree on n nodes is
// realized by some string of length at most n - 1, and every realizer uses
// exactly the letters below the root, so the search is complete.

#ifndef SUFFICERE_ORACLE_HPP_
#define SUFFICERE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "sufficere/tree.hpp"

namespace sufficere {

struct OracleOptions {
  /// Longest candidate tried; defaults to n - 1.
  std::optional<std::int64_t> max_len;
  /// Shortest candidate tried; defaults to the number of leaves.
  std::optional<std::int64_t> min_len;
  /// Maximum number of candidate strings examined.
  std::int64_t step_cap = 20'000'000;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  explicit OracleBudgetExceeded(std::int64_t cap);
};

/// The length-lex smallest realizer within the length bounds, or nullopt.
/// When the root has a '$' leaf, candidates are words over the other root
/// letters followed by '$'; `max_len` then bounds the whole string.
/// Throws OracleBudgetExceeded.
std::optional<std::string> oracle_decide(const AnnotatedTree& tree,
                                         const OracleOptions& options = {});

/// Length of the shortest realizer, or nullopt if there is none.
std::optional<std::int64_t> minimal_realizer_length(
    const AnnotatedTree& tree, const OracleOptions& options = {});

}  // namespace sufficere

#endif  // SUFFICERE_ORACLE_HPP_
