#pragma once

#include <cstdint>
#include <random>

#include "weylsym/rational.hpp"

namespace weylsym {

/// Seeded source for instance generation. The engine is std::mt19937_64,
/// whose output sequence is fixed by the standard; the reductions below are
/// written out so results do not depend on a library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// True with probability exactly p (p in [0,1]) at 2^-64 resolution.
  bool chance(const Rational& p);

  /// Numerator in [-9, 9], denominator in {1, 2, 3, 4}. May be zero.
  Rational small_rational();

  /// Nonzero variant of small_rational.
  Rational small_nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

}  // namespace weylsym
