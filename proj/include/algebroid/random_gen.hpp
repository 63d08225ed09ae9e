#ifndef ALGEBROID_RANDOM_GEN_HPP
#define ALGEBROID_RANDOM_GEN_HPP

#include "algebroid/cochain.hpp"
#include "algebroid/gallery.hpp"

#include <cstdint>
#include <random>

namespace algebroid {

/// Deterministic random source. Draws avoid std::uniform_int_distribution
/// so that identical seeds give identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi] (modulo reduction; fine for test data).
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() % 2 == 0; }

  /// Rational with |value| <= 2 and denominator in {1,..,4}.
  Rational small_rational() {
    int den = range(1, 4);
    int num = range(-2 * den, 2 * den);
    return Rational(num, den);
  }

private:
  std::mt19937_64 engine_;
};

/// Skew bracket table with small rational entries; generically not Jacobi.
LieTable random_lie_table(int dim, Rng &rng);

/// Random skew table packaged as an algebra over a point.
AlgebroidSpec random_almost_lie_algebra(int dim, Rng &rng);

/// Sparse polynomial with the given variable count, total degree bound and
/// term count bound.
Polynomial random_polynomial(int nvars, int max_degree, int max_terms, Rng &rng);

/// Homogeneous cochain of the requested degree with up to max_terms random
/// basis keys and small random coefficients (coefficient degree bounded by
/// coeff_degree).
Cochain random_cochain(const AlgebroidSpec &spec, int degree, int max_terms, int coeff_degree,
                       Rng &rng);

} // namespace algebroid

#endif
