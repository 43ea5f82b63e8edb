#ifndef UMBRAL_UMBRAL_POLY_HPP
#define UMBRAL_UMBRAL_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

// An indeterminate of an umbral polynomial: either one of the formal
// variables x, y or an umbral symbol registered in an Alphabet. Symbols with
// different ids are uncorrelated under evaluation even if they are bound to
// the same umbra.
struct UmbralSymbol {
    std::uint32_t id;

    [[nodiscard]] bool is_formal_variable() const
    {
        return id < 2;
    }
    friend auto operator<=>(const UmbralSymbol &, const UmbralSymbol &) = default;
};

inline constexpr UmbralSymbol var_x{0};
inline constexpr UmbralSymbol var_y{1};

// Owns the bindings of umbral symbols. Every call to fresh() yields a new,
// uncorrelated symbol; callers decide explicitly which occurrences share one.
class Alphabet
{
public:
    UmbralSymbol fresh(Umbra binding);
    [[nodiscard]] const Umbra &binding(UmbralSymbol s) const;

private:
    std::vector<Umbra> bindings_;
};

class UmbralPolynomial
{
public:
    // (indeterminate id, exponent) pairs sorted by id, exponents positive.
    using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    using Terms = std::map<Monomial, Rational>;

    UmbralPolynomial() = default;
    explicit UmbralPolynomial(const Rational &c);
    explicit UmbralPolynomial(UmbralSymbol s);

    static UmbralPolynomial x()
    {
        return UmbralPolynomial(var_x);
    }
    static UmbralPolynomial y()
    {
        return UmbralPolynomial(var_y);
    }

    [[nodiscard]] const Terms &terms() const
    {
        return terms_;
    }
    [[nodiscard]] bool is_zero() const
    {
        return terms_.empty();
    }

    UmbralPolynomial &operator+=(const UmbralPolynomial &o);
    UmbralPolynomial &operator-=(const UmbralPolynomial &o);
    friend UmbralPolynomial operator+(UmbralPolynomial a, const UmbralPolynomial &b)
    {
        return a += b;
    }
    friend UmbralPolynomial operator-(UmbralPolynomial a, const UmbralPolynomial &b)
    {
        return a -= b;
    }
    friend UmbralPolynomial operator*(const UmbralPolynomial &a, const UmbralPolynomial &b);
    friend UmbralPolynomial operator*(UmbralPolynomial a, const Rational &c);

    [[nodiscard]] UmbralPolynomial pow(unsigned n) const;

    // Power-rule derivative in the chosen indeterminate.
    [[nodiscard]] UmbralPolynomial formal_derivative(UmbralSymbol wrt) const;

    friend bool operator==(const UmbralPolynomial &, const UmbralPolynomial &) = default;

private:
    void add_term(const Monomial &m, const Rational &c);

    Terms terms_;
};

// The evaluation functional: x^a y^b s1^c s2^d ... -> x^a y^b m_c(s1) m_d(s2) ...
// Throws DomainError when an exponent exceeds the order of the bound umbra.
BiPoly evaluate_xy(const UmbralPolynomial &p, const Alphabet &alphabet);
// Same, for polynomials free of y.
Poly evaluate(const UmbralPolynomial &p, const Alphabet &alphabet);

// gamma (gamma + n.alpha)^{n-1}, where n.alpha is a fresh symbol bound to
// dot_scalar(n, alpha). Returns 1 for n = 0.
UmbralPolynomial abel_polynomial(Alphabet &alphabet, unsigned n, const UmbralPolynomial &gamma, const Umbra &alpha);

// E[x (x + n.alpha)^{n-1}], a monic degree-n polynomial in x.
Poly abel(unsigned n, const Umbra &alpha);
// E[gamma (gamma + n.alpha)^{n-1}] for an umbra gamma.
Rational abel(unsigned n, const Umbra &gamma, const Umbra &alpha);

} // namespace umbral

#endif
