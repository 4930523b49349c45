#pragma once

#include <cstdint>

namespace splitgraph {

/// splitmix64. Used instead of <random> engines/distributions so that a seed
/// produces the same graph on every platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). Rejection-free modulo is fine here: bound is tiny
  /// (graph orders), so the bias is far below anything observable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

}  // namespace splitgraph
