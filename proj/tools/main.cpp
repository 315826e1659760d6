// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "lppiep/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return lppiep::cli::run(args, std::cout, std::cerr);
}
