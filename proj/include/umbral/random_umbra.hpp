#ifndef UMBRAL_RANDOM_UMBRA_HPP
#define UMBRAL_RANDOM_UMBRA_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

// Reproducible source of small random umbrae and scalars. Draws reduce the
// raw mt19937_64 output modulo the range, so a seed yields the same values
// on every standard library.
class UmbraGenerator
{
public:
    explicit UmbraGenerator(std::uint64_t seed) : rng_(seed)
    {
    }

    // Uniform integer in [lo, hi].
    long integer(long lo, long hi);

    // m_0 = 1, m_n uniform in [-spread, spread].
    Umbra umbra(std::size_t order, long spread = 3);
    // Same, conditioned on m_1 != 0.
    Umbra invertible_umbra(std::size_t order, long spread = 3);

    // p/q with p in [-spread, spread] and q in [1, max_den].
    Rational rational(long spread = 4, long max_den = 3);
    Rational nonzero_rational(long spread = 4, long max_den = 3);

    // Random polynomial of exact degree `degree`.
    Poly polynomial(std::size_t degree, long spread = 3);

private:
    std::mt19937_64 rng_;
};

} // namespace umbral

#endif
