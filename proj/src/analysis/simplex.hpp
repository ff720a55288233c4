#pragma once

#include <cstddef>
#include <vector>

namespace msc::analysis::detail {

enum class LpStatus { optimal, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  std::vector<double> x;
  double objective = 0.0;
};

/// Dense tableau simplex for: maximize c.x subject to A x <= b, x >= 0,
/// with b >= 0 so the slack basis is a feasible start. `a` is row-major,
/// rows x c.size().
LpResult maximize(const std::vector<double>& c, const std::vector<double>& a, const std::vector<double>& b,
                  std::size_t max_pivots = 20000);

}  // namespace msc::analysis::detail
