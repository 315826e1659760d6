// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPPIEP_CLI_HPP
#define LPPIEP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lppiep::cli
{

enum ExitCode : int
{
  kSolved = 0,
  kUsageError = 1,
  kInconsistent = 2,
  kVerifyFailed = 3,
};

// Runs the `lppiep` command line. args[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace lppiep::cli

#endif  // LPPIEP_CLI_HPP
