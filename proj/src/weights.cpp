#include "msc/weights.hpp"

#include "msc/errors.hpp"

namespace msc {

WeightVector::WeightVector(std::size_t cap) : cap_(cap), v_(cap, 1.0), w_(cap, 1.0) {
  if (cap == 0) throw ConfigError("weight cap must be at least 1");
  v_[0] = 0.0;
  w_[0] = 0.0;
}

void WeightVector::set_v(std::size_t i, double x) {
  if (i == 0 || i >= cap_) throw ConfigError("v index outside the free range");
  v_[i] = x;
}

void WeightVector::set_w(std::size_t i, double x) {
  if (i == 0 || i >= cap_) throw ConfigError("w index outside the free range");
  w_[i] = x;
}

}  // namespace msc
