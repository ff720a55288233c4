#pragma once

#include <cstddef>
#include <vector>

namespace msc {

/// Measure weights v_i (element of frequency i) and w_i (set of size i).
/// Entries at index >= cap are fixed to 1; index 0 is always 0.
class WeightVector {
 public:
  WeightVector() = default;
  /// All free entries start at 1.
  explicit WeightVector(std::size_t cap);

  std::size_t cap() const { return cap_; }

  double v(std::size_t i) const { return i >= cap_ ? 1.0 : v_[i]; }
  double w(std::size_t i) const { return i >= cap_ ? 1.0 : w_[i]; }
  double dv(std::size_t i) const { return v(i) - v(i - 1); }
  double dw(std::size_t i) const { return w(i) - w(i - 1); }

  /// Index must be in 1..cap-1.
  void set_v(std::size_t i, double x);
  void set_w(std::size_t i, double x);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::size_t cap_ = 1;
  std::vector<double> v_{0.0};
  std::vector<double> w_{0.0};
};

}  // namespace msc
