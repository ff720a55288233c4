#pragma once

#include "msc/analysis/stage.hpp"

namespace msc::analysis {

/// Unique alpha > 1 with alpha^-dk_out + alpha^-dk_in = 1. Both reductions
/// must be positive and finite, otherwise DomainError.
double branching_number(double dk_out, double dk_in);
double branching_number(const CaseReduction& r);

/// The root together with its partial derivatives in dk_out and dk_in.
struct BranchingRoot {
  double alpha = 0.0;
  double d_out = 0.0;
  double d_in = 0.0;
};

BranchingRoot branching_root(double dk_out, double dk_in);

}  // namespace msc::analysis
