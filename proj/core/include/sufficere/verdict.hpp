// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// Decision outcomes shared by the deciders.

#ifndef SUFFICERE_VERDICT_HPP_
#define SUFFICERE_VERDICT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sufficere/tree.hpp"

namespace sufficere {

enum class Reason {
  kPreconditionP1,
  kPreconditionP2,
  kNoDollarShape,
  kNegativeD,
  kDLeMinus2,
  kNegDNotAncestors,
  kNotEulerian,
  kNoEulerCycle,
  kNoSurvivor,
  kVerificationFailed,
};

/// Stable upper-case code, e.g. "NO_SURVIVOR".
std::string_view reason_code(Reason reason) noexcept;

/// Where the deepest '$'-leaf hangs: at an explicit node, or at a new node
/// one character below the upper end of the edge into `node`.
struct SLocation {
  enum class Kind : std::uint8_t { kExplicit, kImplicit };

  Kind kind = Kind::kExplicit;
  NodeId node = kRoot;

  static SLocation at(NodeId x) { return {Kind::kExplicit, x}; }
  static SLocation above(NodeId x) { return {Kind::kImplicit, x}; }
  bool is_explicit() const noexcept { return kind == Kind::kExplicit; }

  friend bool operator==(const SLocation&, const SLocation&) = default;
};

/// "E<id>" for explicit locations, "I<id>" for implicit ones.
std::string to_string(SLocation loc);

/// Why a candidate location was dropped, or that it produced the answer.
enum class Stage {
  kStep1,
  kBrokenPath,
  kStep2,
  kStep3,
  kAugment,
  kDollarTree,
  kVerify,
  kAccepted,
  kNotTried,
};

std::string_view stage_name(Stage stage) noexcept;

struct LocationTrace {
  SLocation location;
  Stage stage = Stage::kNotTried;
};

struct Verdict {
  bool is_suffix_tree = false;
  /// Set iff !is_suffix_tree.
  std::optional<Reason> reason;
  /// The realizing string; includes the final '$' for '$'-trees.
  std::string realizer;
  /// Location of the deepest '$'-leaf used (general decider only).
  std::optional<SLocation> location;
  /// The '$'-tree the realizer was read from (general decider only).
  std::optional<AnnotatedTree> augmented;
  /// Filled when tracing was requested.
  std::vector<LocationTrace> trace;

  static Verdict yes(std::string s) {
    Verdict v;
    v.is_suffix_tree = true;
    v.realizer = std::move(s);
    return v;
  }
  static Verdict no(Reason r) {
    Verdict v;
    v.reason = r;
    return v;
  }
};

}  // namespace sufficere

#endif  // SUFFICERE_VERDICT_HPP_
