#include "weylsym/random.hpp"

#include <limits>

namespace weylsym {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(const Rational& p) {
  // u / 2^64 < p  <=>  u * den < num * 2^64
  Integer u;
  const std::uint64_t raw = next();
  mpz_import(u.get_mpz_t(), 1, 1, sizeof raw, 0, 0, &raw);
  Integer rhs = p.get_num();
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 64);
  return u * p.get_den() < rhs;
}

Rational Rng::small_rational() {
  const auto num = between(-9, 9);
  const auto den = between(1, 4);
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

Rational Rng::small_nonzero_rational() {
  Rational q;
  do {
    q = small_rational();
  } while (q == 0);
  return q;
}

}  // namespace weylsym
