#include "support.hpp"

#include "umbral/errors.hpp"
#include "umbral/random_umbra.hpp"
#include "umbral/umbral_poly.hpp"
#include "umbral/verify.hpp"

using support::poly;
using umbral::Alphabet;
using umbral::Poly;
using umbral::Rational;
using umbral::UmbralPolynomial;
namespace u = umbral;

TEST_CASE("evaluation")
{
    const auto x = UmbralPolynomial::x();
    {
        Alphabet a;
        const UmbralPolynomial chi(a.fresh(u::singleton(4)));
        CHECK(u::evaluate(x.pow(2) * chi.pow(3), a) == Poly());
        CHECK(u::evaluate(chi.pow(2), a) == Poly());
    }
    {
        Alphabet a;
        const UmbralPolynomial s(a.fresh(u::ubar(4)));
        CHECK(u::evaluate((x + s).pow(2), a) == poly({2, 2, 1}));
    }
    {
        Alphabet a;
        const UmbralPolynomial s1(a.fresh(u::singleton(4))), s2(a.fresh(u::singleton(4)));
        CHECK(u::evaluate(s1 * s2, a) == Poly(Rational(1)));
    }
    {
        Alphabet a;
        const UmbralPolynomial s(a.fresh(u::bell(2)));
        CHECK_THROWS_AS(u::evaluate(s.pow(3), a), u::DomainError);
    }
    const auto y = UmbralPolynomial::y();
    Alphabet a;
    CHECK_THROWS_AS(u::evaluate(y, a), u::DomainError);
    CHECK(u::evaluate_xy(x * y, a) == u::in_x(Poly::variable()) * u::in_y(Poly::variable()));
}

TEST_CASE("property: evaluation of (x + sigma)^n expands by moments")
{
    umbral::UmbraGenerator gen(12);
    for (int i = 0; i < 20; ++i) {
        const auto m = gen.umbra(7);
        Alphabet a;
        const UmbralPolynomial s(a.fresh(m));
        for (unsigned n = 0; n <= 7; ++n) {
            Poly oracle;
            for (unsigned k = 0; k <= n; ++k) {
                oracle += Poly::monomial(u::binomial(Rational(n), k) * m.moment(n - k), k);
            }
            CHECK(u::evaluate((UmbralPolynomial::x() + s).pow(n), a) == oracle);
        }
    }
}

TEST_CASE("Abel polynomials")
{
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(u::abel(n, u::augmentation(5)) == Poly::monomial(Rational(1), n));
    }
    const Rational c(-2, 3);
    CHECK(u::abel(2, u::scalar(c, 4)) == poly({0, Rational(2) * c, 1}));
    CHECK(u::abel(3, u::scalar(1, 4)) == poly({0, 9, 6, 1}));
    CHECK(u::abel(0, u::bell(3)) == Poly(Rational(1)));

    // classical x (x + n a)^{n-1} for scalar umbrae
    umbral::UmbraGenerator gen(13);
    for (int i = 0; i < 10; ++i) {
        const Rational s = gen.rational();
        for (unsigned n = 1; n <= 7; ++n) {
            Poly oracle = Poly::variable();
            for (unsigned k = 1; k < n; ++k) {
                oracle = oracle * poly({Rational(n) * s, 1});
            }
            CHECK(u::abel(n, u::scalar(s, 7)) == oracle);
        }
    }
    CHECK_THROWS_AS(u::abel(5, u::bell(3)), u::DomainError);
}

TEST_CASE("formal derivative")
{
    const auto x = UmbralPolynomial::x();
    CHECK(x.pow(3).formal_derivative(u::var_x) == x.pow(2) * Rational(3));
    Alphabet a;
    const auto gs = a.fresh(u::bell(4));
    const auto ss = a.fresh(u::bell(4));
    const UmbralPolynomial g(gs), s(ss);
    CHECK((g * (g + s)).formal_derivative(gs) == g * Rational(2) + s);
    CHECK(UmbralPolynomial(Rational(7)).formal_derivative(gs).is_zero());
    CHECK(UmbralPolynomial(Rational(7)).formal_derivative(u::var_x).is_zero());
}

TEST_CASE("substitution into an umbral argument")
{
    Alphabet a;
    const UmbralPolynomial s(a.fresh(u::ubar(4)));
    const auto x = UmbralPolynomial::x();
    CHECK(u::evaluate(u::substitute(poly({1, 0, 1}), x + s), a) == poly({3, 2, 1}));
    CHECK(u::evaluate(u::substitute(Poly(), x), a) == Poly());
}

TEST_CASE("property: Abel identity on small random triples")
{
    umbral::UmbraGenerator gen(14);
    for (int i = 0; i < 5; ++i) {
        const std::size_t order = 6;
        const auto alpha = gen.umbra(order), gamma = gen.umbra(order), delta = gen.umbra(order);
        for (unsigned n = 0; n <= order; ++n) {
            Alphabet a;
            const UmbralPolynomial d(a.fresh(delta)), g(a.fresh(gamma));
            const Rational lhs = u::evaluate((d + g).pow(n), a)[0];
            Rational rhs;
            for (unsigned k = 0; k <= n; ++k) {
                const UmbralPolynomial ka(a.fresh(u::dot_scalar(Rational(k), alpha)));
                rhs += u::binomial(Rational(n), k) * u::evaluate((d + ka).pow(n - k), a)[0] *
                       u::abel(k, gamma, u::dot_scalar(-1, alpha));
            }
            CHECK(lhs == rhs);
        }
    }
}
