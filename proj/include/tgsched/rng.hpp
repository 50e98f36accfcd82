#pragma once

#include <array>
#include <cstdint>

namespace tgsched {

/// xoshiro256** 1.0 (Blackman & Vigna), seeded through splitmix64.
///
/// This is the only generator used by the library. Its output sequence for a
/// given seed is part of the reproducibility contract: augmented graphs,
/// RunReports and comparison tables are all pinned against it.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return next(); }
  result_type next();

  /// Uniform integer in [0, bound). Unbiased (Lemire's multiply-shift with
  /// rejection). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi], lo <= hi.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit();

  /// True with probability p (p <= 0 never, p >= 1 always; no draw is skipped).
  bool chance(double p);

  const std::array<std::uint64_t, 4>& state() const { return s_; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& x);

}  // namespace tgsched
