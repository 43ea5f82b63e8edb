#ifndef UMBRAL_TESTS_SUPPORT_HPP
#define UMBRAL_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <ostream>
#include <vector>

#include <doctest.h>

#include "umbral/polynomial.hpp"
#include "umbral/power_series.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

inline std::ostream &operator<<(std::ostream &os, const Poly &p)
{
    return os << to_string(p);
}
inline std::ostream &operator<<(std::ostream &os, const BiPoly &p)
{
    return os << to_string(p);
}
inline std::ostream &operator<<(std::ostream &os, const Umbra &u)
{
    return os << to_string(u);
}
inline std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    os << '[';
    for (std::size_t i = 0; i <= s.order(); ++i) {
        os << (i ? ", " : "") << s[i];
    }
    return os << ']';
}

} // namespace umbral

namespace support
{

using umbral::Rational;

inline umbral::Poly poly(std::initializer_list<Rational> c)
{
    return umbral::Poly(std::vector<Rational>(c));
}

inline umbral::TruncatedSeries series(std::initializer_list<Rational> c, std::size_t order)
{
    return umbral::TruncatedSeries(std::vector<Rational>(c), order);
}

inline umbral::Umbra moments(std::initializer_list<Rational> m)
{
    return umbral::Umbra(std::vector<Rational>(m));
}

} // namespace support

#endif
