#pragma once

// Deterministic generators for property tests and sampled checks. Only raw
// mt19937_64 output is used, so streams are identical across platforms.

#include <random>

#include "starrep/scalars.hpp"

namespace starrep {

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long span = 3, long max_den = 3) {
  Rational q(uniform_int(rng, -span, span), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Gauss random_gauss(std::mt19937_64& rng, bool real = false) {
  return real ? Gauss(random_rational(rng)) : Gauss(random_rational(rng), random_rational(rng));
}

/// Random series with nonzero coefficients only up to lambda^max_degree.
inline Series random_series(std::mt19937_64& rng, int max_degree = 2, bool real = false) {
  Series s;
  for (int r = 0; r <= max_degree && r <= s.order(); ++r) s[r] = random_gauss(rng, real);
  return s;
}

}  // namespace starrep
