// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/verdict.hpp"

namespace sufficere {

std::string_view reason_code(Reason reason) noexcept {
  switch (reason) {
    case Reason::kPreconditionP1: return "PRECONDITION_P1";
    case Reason::kPreconditionP2: return "PRECONDITION_P2";
    case Reason::kNoDollarShape: return "NO_DOLLAR_SHAPE";
    case Reason::kNegativeD: return "NEGATIVE_D";
    case Reason::kDLeMinus2: return "D_LE_MINUS2";
    case Reason::kNegDNotAncestors: return "NEG_D_NOT_ANCESTORS";
    case Reason::kNotEulerian: return "NOT_EULERIAN";
    case Reason::kNoEulerCycle: return "NO_EULER_CYCLE";
    case Reason::kNoSurvivor: return "NO_SURVIVOR";
    case Reason::kVerificationFailed: return "VERIFICATION_FAILED";
  }
  return "UNKNOWN";
}

std::string to_string(SLocation loc) {
  return (loc.is_explicit() ? "E" : "I") + std::to_string(loc.node);
}

std::string_view stage_name(Stage stage) noexcept {
  switch (stage) {
    case Stage::kStep1: return "step1";
    case Stage::kBrokenPath: return "broken-path";
    case Stage::kStep2: return "step2";
    case Stage::kStep3: return "step3";
    case Stage::kAugment: return "augment";
    case Stage::kDollarTree: return "dollar-tree";
    case Stage::kVerify: return "verify";
    case Stage::kAccepted: return "accepted";
    case Stage::kNotTried: return "not-tried";
  }
  return "unknown";
}

}  // namespace sufficere
