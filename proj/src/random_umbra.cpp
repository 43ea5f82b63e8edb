#include "umbral/random_umbra.hpp"

namespace umbral
{

long UmbraGenerator::integer(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Umbra UmbraGenerator::umbra(std::size_t order, long spread)
{
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        m[n] = integer(-spread, spread);
    }
    return Umbra(std::move(m));
}

Umbra UmbraGenerator::invertible_umbra(std::size_t order, long spread)
{
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        long v = integer(-spread, spread);
        while (n == 1 && v == 0) {
            v = integer(-spread, spread);
        }
        m[n] = v;
    }
    return Umbra(std::move(m));
}

Rational UmbraGenerator::rational(long spread, long max_den)
{
    const long p = integer(-spread, spread);
    const long q = integer(1, max_den);
    return {p, q};
}

Rational UmbraGenerator::nonzero_rational(long spread, long max_den)
{
    Rational r = rational(spread, max_den);
    while (r.is_zero()) {
        r = rational(spread, max_den);
    }
    return r;
}

Poly UmbraGenerator::polynomial(std::size_t degree, long spread)
{
    std::vector<Rational> c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) {
        c[i] = integer(-spread, spread);
    }
    while (c[degree].is_zero()) {
        c[degree] = integer(-spread, spread);
    }
    return Poly(std::move(c));
}

} // namespace umbral
