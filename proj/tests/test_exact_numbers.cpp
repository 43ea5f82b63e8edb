#include <doctest.h>

#include "umbral/errors.hpp"
#include "umbral/random_umbra.hpp"
#include "umbral/rational.hpp"

using umbral::Rational;

namespace
{

// Direct product top (top-1) ... (top-k+1).
Rational product_oracle(const Rational &top, unsigned k)
{
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * (top - Rational(i));
    }
    return acc;
}

} // namespace

TEST_CASE("rationals are kept in lowest terms")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), umbral::DomainError);
}

TEST_CASE("rational arithmetic")
{
    const Rational a(1, 3), b(-5, 6);
    CHECK(a + b == Rational(-1, 2));
    CHECK(a - b == Rational(7, 6));
    CHECK(a * b == Rational(-5, 18));
    CHECK(a / b == Rational(-2, 5));
    CHECK(-a == Rational(-1, 3));
    CHECK(a > b);
    CHECK_THROWS_AS(a / Rational(0), umbral::DomainError);
    CHECK(umbral::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(umbral::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(umbral::pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("parsing and printing round-trip")
{
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    for (const char *bad : {"", "1/0", "abc", "1/", "/2", "1//2", "--1", "1.5"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), umbral::ParseError);
    }
    umbral::UmbraGenerator gen(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r = gen.rational(1000, 1000);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("binomial coefficients with rational top")
{
    CHECK(umbral::binomial(Rational(5), 2) == Rational(10));
    CHECK(umbral::binomial(Rational(-1), 3) == Rational(-1));
    CHECK(umbral::binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(umbral::binomial(Rational(3), 5) == Rational(0));
    CHECK(umbral::binomial(Rational(-1), 3) == product_oracle(Rational(-1), 3) / umbral::factorial(3));
    CHECK(umbral::binomial(Rational(1, 2), 2) == Rational(1, 2) * Rational(-1, 2) / Rational(2));
}

TEST_CASE("falling factorials")
{
    CHECK(umbral::falling_factorial(Rational(4), 4) == Rational(24));
    CHECK(umbral::falling_factorial(Rational(-2), 3) == Rational(-24));
    CHECK(umbral::falling_factorial(Rational(-2), 3) == product_oracle(Rational(-2), 3));
    umbral::UmbraGenerator gen(11);
    for (int i = 0; i < 50; ++i) {
        const Rational top = gen.rational(20, 7);
        CHECK(umbral::falling_factorial(top, 0) == Rational(1));
        const auto k = static_cast<unsigned>(gen.integer(0, 9));
        CHECK(umbral::falling_factorial(top, k) == product_oracle(top, k));
    }
}

TEST_CASE("factorial matches repeated multiplication")
{
    Rational acc(1);
    for (unsigned n = 0; n <= 30; ++n) {
        if (n > 0) {
            acc *= Rational(n);
        }
        CHECK(umbral::factorial(n) == acc);
    }
}

TEST_CASE("property: Pascal rule and Vandermonde convolution for rational tops")
{
    umbral::UmbraGenerator gen(2024);
    for (int i = 0; i < 100; ++i) {
        const Rational a = gen.rational(10, 5), b = gen.rational(10, 5);
        const auto k = static_cast<unsigned>(gen.integer(1, 8));
        CHECK(umbral::binomial(a + Rational(1), k) == umbral::binomial(a, k) + umbral::binomial(a, k - 1));
        Rational conv;
        for (unsigned j = 0; j <= k; ++j) {
            conv += umbral::binomial(a, j) * umbral::binomial(b, k - j);
        }
        CHECK(umbral::binomial(a + b, k) == conv);
    }
}

TEST_CASE("property: field axioms on random rationals")
{
    umbral::UmbraGenerator gen(99);
    for (int i = 0; i < 200; ++i) {
        const Rational a = gen.rational(50, 20), b = gen.rational(50, 20), c = gen.nonzero_rational(50, 20);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a / c * c == a);
        CHECK(a - a == Rational(0));
    }
}
