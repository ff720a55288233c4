#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "msc/instance.hpp"

namespace msc {

/// Seeded generator with library-independent integer and real draws, so a
/// seed produces the same corpus on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// G(n, p) plus a random spanning tree, hence connected.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Random instance with exactly `dimension` = sets + elements (>= 2).
/// Each element joins each set with probability `density`; repairs keep
/// every set non-empty and every element covered.
SetCoverInstance random_setcover(std::size_t dimension, double density, Rng& rng);

/// Random instance whose sets all have size 1 or 2, dimension at most `dimension`.
SetCoverInstance random_small_sets(std::size_t dimension, Rng& rng);

}  // namespace msc
