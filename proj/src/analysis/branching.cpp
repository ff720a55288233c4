#include "msc/analysis/branching.hpp"

#include <cmath>
#include <string>

#include "msc/errors.hpp"

namespace msc::analysis {

namespace {

/// Root of f(t) = e^{-a t} + e^{-b t} - 1 in t = ln(alpha). f is convex and
/// decreasing with f(0) = 1, so Newton from t = 0 increases monotonically
/// towards the root.
double log_root(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("branching number needs positive reductions, got (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  }
  double t = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double ea = std::exp(-a * t);
    const double eb = std::exp(-b * t);
    const double f = ea + eb - 1.0;
    if (f <= 0.0) break;
    const double step = f / (a * ea + b * eb);
    t += step;
    if (step <= t * 1e-17) break;
  }
  return t;
}

}  // namespace

double branching_number(double dk_out, double dk_in) { return std::exp(log_root(dk_out, dk_in)); }

double branching_number(const CaseReduction& r) { return branching_number(r.dk_out, r.dk_in); }

BranchingRoot branching_root(double dk_out, double dk_in) {
  const double t = log_root(dk_out, dk_in);
  const double ea = std::exp(-dk_out * t);
  const double eb = std::exp(-dk_in * t);
  const double slope = dk_out * ea + dk_in * eb;
  const double alpha = std::exp(t);
  // Implicit differentiation of e^{-a t} + e^{-b t} = 1.
  return {alpha, -alpha * t * ea / slope, -alpha * t * eb / slope};
}

}  // namespace msc::analysis
