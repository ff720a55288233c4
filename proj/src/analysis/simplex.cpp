#include "simplex.hpp"

#include <cmath>
#include <limits>

#include "msc/errors.hpp"

namespace msc::analysis::detail {

LpResult maximize(const std::vector<double>& c, const std::vector<double>& a, const std::vector<double>& b,
                  std::size_t max_pivots) {
  const std::size_t n = c.size();
  const std::size_t m = b.size();
  if (a.size() != n * m) throw ContractError("constraint matrix has the wrong shape");
  const std::size_t cols = n + m + 1;  // structural, slack, rhs
  constexpr double eps = 1e-12;

  std::vector<double> t((m + 1) * cols, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * cols + col]; };
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0.0) throw ContractError("simplex start needs b >= 0");
    for (std::size_t j = 0; j < n; ++j) at(r, j) = a[r * n + j];
    at(r, n + r) = 1.0;
    at(r, cols - 1) = b[r];
    basis[r] = n + r;
  }
  // Objective row holds reduced costs of the minimisation of -c.x.
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];

  LpResult result;
  std::size_t degenerate = 0;
  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots == max_pivots) {
      result.status = LpStatus::iteration_limit;
      break;
    }
    const bool bland = degenerate > 50;
    std::size_t enter = cols;
    double best = -eps;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      const double rc = at(m, j);
      if (rc < best) {
        enter = j;
        if (bland) break;
        best = rc;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double coef = at(r, enter);
      if (coef <= eps) continue;
      const double q = at(r, cols - 1) / coef;
      if (q < ratio - 1e-15 || (std::abs(q - ratio) <= 1e-15 && leave < m && basis[r] < basis[leave])) {
        ratio = q;
        leave = r;
      }
    }
    if (leave == m) {
      result.status = LpStatus::unbounded;
      return result;
    }
    degenerate = ratio <= eps ? degenerate + 1 : 0;

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) at(leave, j) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      double* row = &t[r * cols];
      const double* prow = &t[leave * cols];
      for (std::size_t j = 0; j < cols; ++j) row[j] -= factor * prow[j];
    }
    basis[leave] = enter;
  }

  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) result.x[basis[r]] = std::max(0.0, at(r, cols - 1));
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace msc::analysis::detail
