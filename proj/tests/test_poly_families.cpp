#include "support.hpp"

#include "umbral/errors.hpp"
#include "umbral/families.hpp"
#include "umbral/random_umbra.hpp"

using support::poly;
using umbral::BiPoly;
using umbral::MasterParams;
using umbral::Poly;
using umbral::Rational;
namespace u = umbral;
namespace fam = umbral::family;

TEST_CASE("master polynomial")
{
    const MasterParams p = MasterParams::free(Rational(3, 2), Rational(-2, 5));
    CHECK(u::master_polynomial(0, p) == BiPoly(Poly(Rational(1))));
    // t + x y
    const BiPoly expected1 = BiPoly(Poly(p.t)) + u::in_x(Poly::variable()) * u::in_y(Poly::variable());
    CHECK(u::master_polynomial(1, p) == expected1);
    u::UmbraGenerator gen(31);
    for (int i = 0; i < 5; ++i) {
        const auto q = MasterParams::free(gen.rational(), gen.rational());
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(u::master_polynomial(n, q) == u::master_via_gf(n, q));
        }
    }
    // the Chebyshev substitution at n = 2, divided by 2!
    const auto cheb = u::family_params(fam::ChebyshevU{});
    CHECK(u::drop_y(u::master_polynomial(2, cheb)) == poly({-2, 0, 8}));
}

TEST_CASE("Chebyshev polynomials of the second kind")
{
    CHECK(u::chebyshev_u(0) == poly({1}));
    CHECK(u::chebyshev_u(1) == poly({0, 2}));
    CHECK(u::chebyshev_u(2) == poly({-1, 0, 4}));
    CHECK(u::chebyshev_u(3) == poly({0, -4, 0, 8}));
    const Poly two_x = poly({0, 2});
    for (unsigned n = 2; n <= 10; ++n) {
        CHECK(u::chebyshev_u(n) == two_x * u::chebyshev_u(n - 1) - u::chebyshev_u(n - 2));
    }
    CHECK(u::gf_oracle(fam::ChebyshevU{}, 2) == poly({-1, 0, 4}));
}

TEST_CASE("Gegenbauer polynomials")
{
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(u::gegenbauer(n, 1) == u::chebyshev_u(n));
    }
    u::UmbraGenerator gen(32);
    for (int i = 0; i < 10; ++i) {
        const Rational l = gen.nonzero_rational();
        CHECK(u::gegenbauer(0, l) == poly({1}));
        CHECK(u::gegenbauer(1, l) == poly({0, Rational(2) * l}));
        CHECK(u::gegenbauer(2, l) == poly({-l, 0, Rational(2) * l * (l + Rational(1))}));
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(u::gegenbauer(n, l) == u::gf_oracle(fam::Gegenbauer{l}, n));
        }
    }
}

TEST_CASE("Meixner polynomials of the first kind")
{
    u::UmbraGenerator gen(33);
    for (int i = 0; i < 10; ++i) {
        Rational b = gen.nonzero_rational(), c = gen.nonzero_rational();
        if (b.is_integer() && b.sign() < 0) {
            b = -b;
        }
        if (c.is_one()) {
            c = Rational(3);
        }
        CHECK(u::meixner1(0, b, c) == poly({1}));
        CHECK(u::meixner1(1, b, c) == poly({b, (c - Rational(1)) / c}));
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(u::meixner1(n, b, c) == u::gf_oracle(fam::Meixner{b, c}, n));
        }
    }
    // (1-z)^{-1} ((1-z/2)/(1-z))^x: 2![z^2] = 2 + 7x/4 + x^2/4
    CHECK(u::meixner1(2, 1, 2) == poly({2, Rational(7, 4), Rational(1, 4)}));
    CHECK(u::meixner1(2, 1, 2) == u::gf_oracle(fam::Meixner{1, 2}, 2));
    // the sign of the printed base (1-c)/c would give b - x/2 at n = 1
    CHECK(u::meixner1(1, 1, 2) != poly({1, Rational(-1, 2)}));

    CHECK_THROWS_AS(u::meixner1(2, 1, 1), u::DomainError);
    CHECK_THROWS_AS(u::meixner1(2, 1, 0), u::DomainError);
    CHECK_THROWS_AS(u::meixner1(2, 0, 2), u::DomainError);
    CHECK_THROWS_AS(u::meixner1(2, -3, 2), u::DomainError);
    CHECK_NOTHROW(u::meixner1(2, Rational(-3, 2), 2));
}

TEST_CASE("Mittag-Leffler and Pidduck polynomials")
{
    CHECK(u::mittag_leffler(0) == poly({1}));
    CHECK(u::mittag_leffler(1) == poly({0, 2}));
    CHECK(u::mittag_leffler(2) == poly({0, 0, 4}));
    CHECK(u::pidduck(0) == poly({1}));
    CHECK(u::pidduck(1) == poly({1, 2}));
    CHECK(u::gf_oracle(fam::MittagLeffler{}, 0) == poly({1}));
    CHECK(u::gf_oracle(fam::Pidduck{}, 1) == poly({1, 2}));
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(u::mittag_leffler(n) == u::gf_oracle(fam::MittagLeffler{}, n));
        CHECK(u::pidduck(n) == u::gf_oracle(fam::Pidduck{}, n));
        CHECK(u::mittag_leffler(n) == u::drop_y(u::master_polynomial(n, u::family_params(fam::Meixner{0, -1}))));
    }
}

TEST_CASE("binomial-basis coefficients")
{
    CHECK(u::binomial_basis_coefficients(fam::Pidduck{}, 1) == std::vector<Rational>{1, 2});
    CHECK(u::binomial_basis_coefficients(fam::MittagLeffler{}, 2) == std::vector<Rational>{0, 4, 8});
    CHECK_THROWS_AS(u::binomial_basis_coefficients(fam::ChebyshevU{}, 2), u::DomainError);
    // recombining C(x,k) gives back the monomial form
    for (const u::FamilyKind &kind : {u::FamilyKind{fam::Pidduck{}}, u::FamilyKind{fam::MittagLeffler{}},
                                      u::FamilyKind{fam::Meixner{Rational(1, 3), Rational(-2)}}}) {
        for (unsigned n = 0; n <= 7; ++n) {
            const auto c = u::binomial_basis_coefficients(kind, n);
            Poly sum;
            for (unsigned k = 0; k <= n; ++k) {
                sum += u::drop_y(u::binomial(u::in_x(Poly::variable()), k)) * c[k];
            }
            CHECK(sum == u::family_polynomial(kind, n));
        }
    }
}

TEST_CASE("family names")
{
    CHECK(u::family_name(fam::ChebyshevU{}) == "chebyshev-u");
    CHECK(u::family_name(fam::Gegenbauer{2}) == "gegenbauer");
    CHECK(u::family_name(fam::Meixner{1, 2}) == "meixner");
    CHECK(u::family_name(fam::MittagLeffler{}) == "mittag-leffler");
    CHECK(u::family_name(fam::Pidduck{}) == "pidduck");
    CHECK(u::is_egf_normalized(fam::Pidduck{}));
    CHECK_FALSE(u::is_egf_normalized(fam::ChebyshevU{}));
}
