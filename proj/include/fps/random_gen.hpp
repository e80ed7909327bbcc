#ifndef FPS_RANDOM_GEN_HPP
#define FPS_RANDOM_GEN_HPP

#include <random>
#include <vector>

#include "fps/generators.hpp"
#include "fps/series.hpp"

// Seed-pinned random inputs for the property suites and the self test.
// Values are derived from raw mt19937_64 output instead of std
// distributions so a fixed seed reproduces identical cases on every
// platform.

namespace fps::rnd {

inline long range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational rational(std::mt19937_64& rng, long max_numerator, long max_denominator,
                         bool allow_negative = true, bool allow_zero = true) {
  long num = range(rng, allow_zero ? 0 : 1, max_numerator);
  const long den = range(rng, 1, max_denominator);
  if (allow_negative && rng() % 2 == 0) num = -num;
  if (!allow_zero && num == 0) num = 1;
  return Rational(num, den);
}

inline Rational positive_rational(std::mt19937_64& rng, long max_numerator, long max_denominator) {
  return rational(rng, max_numerator, max_denominator, /*allow_negative=*/false,
                  /*allow_zero=*/false);
}

inline TruncatedPowerSeries series(std::mt19937_64& rng, int order, long max_numerator = 9,
                                   long max_denominator = 9, bool nonzero_constant = true) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = rational(rng, max_numerator, max_denominator);
  if (nonzero_constant && c[0].is_zero()) c[0] = Rational(1);
  return TruncatedPowerSeries(std::move(c));
}

inline HypergeomParams positive_hypergeom_params(std::mt19937_64& rng, long max_numerator = 8,
                                                 long max_denominator = 8) {
  return HypergeomParams(positive_rational(rng, max_numerator, max_denominator),
                         positive_rational(rng, max_numerator, max_denominator),
                         positive_rational(rng, max_numerator, max_denominator));
}

}  // namespace fps::rnd

#endif
