// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

// The `sufficere` command line, callable in-process for tests.
//
//   sufficere build <string> [--dollar] [--online]
//   sufficere decide [<file>] [--dollar] [--trace] [--no-verify]
//   sufficere stg [<file>] [--dot] [--values]
//   sufficere oracle [<file>] [--max-len L] [--min-len L] [--cap STEPS]
//   sufficere verify <file> <string>
//
// A missing file or "-" reads the tree from standard input. Strings go to
// stdout; reasons go to stderr as `reason=<CODE>` lines. Exit status is 0
// for a positive answer, 1 for a negative one, 2 for bad input or usage.

#ifndef SUFFICERE_TOOLS_CLI_HPP_
#define SUFFICERE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sufficere::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sufficere::cli

#endif  // SUFFICERE_TOOLS_CLI_HPP_
