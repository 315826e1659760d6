// Copyright 2026 The lppiep Authors
// SPDX-License-Identifier: Apache-2.0

#include "lppiep/tolerances.hpp"

#include <algorithm>
#include <limits>

namespace lppiep
{

void ToleranceConfig::validate() const
{
  if (rank_cutoff_factor && !(*rank_cutoff_factor > 0.0))
  {
    throw InputError("rank cutoff factor must be strictly positive");
  }
  if (!(consistency > 0.0))
  {
    throw InputError("consistency tolerance must be strictly positive");
  }
  if (!(membership > 0.0))
  {
    throw InputError("membership tolerance must be strictly positive");
  }
  if (!(pd > 0.0))
  {
    throw InputError("positive-definiteness tolerance must be strictly positive");
  }
}

double ToleranceConfig::rank_factor(Index rows, Index cols) const
{
  if (rank_cutoff_factor)
  {
    return *rank_cutoff_factor;
  }
  return std::numeric_limits<double>::epsilon() *
         static_cast<double>(std::max<Index>({rows, cols, 1}));
}

}  // namespace lppiep
