#include "umbral/families.hpp"

#include <type_traits>

#include "umbral/power_series.hpp"

namespace umbral
{

namespace
{

BiPoly bi_constant(const Rational &r)
{
    return constant_of<BiPoly>(r);
}

BiPoly bi_x()
{
    return in_x(Poly::variable());
}

template <typename... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

MasterParams MasterParams::free(const Rational &q, const Rational &t)
{
    return {bi_x(), BiPoly::variable(), q, t};
}

BiPoly binomial(const BiPoly &top, unsigned k)
{
    BiPoly acc = bi_constant(1);
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * (top - bi_constant(Rational(i)));
    }
    return scaled(acc, Rational(1) / factorial(k));
}

BiPoly master_polynomial(unsigned n, const MasterParams &p)
{
    BiPoly sum;
    BiPoly xpow = bi_constant(1);
    for (unsigned k = 0; k <= n; ++k) {
        const Rational top = Rational(n - k) + p.t + Rational(k) * p.q - 1;
        const Rational c = umbral::binomial(top, n - k);
        if (!c.is_zero()) {
            sum += scaled(binomial(p.y, k) * xpow, c);
        }
        xpow = xpow * p.xval;
    }
    return scaled(sum, factorial(n));
}

BiPoly master_via_gf(unsigned n, const MasterParams &p)
{
    using BiSeries = Series<BiPoly>;
    const auto one = TruncatedSeries::one(n);
    const auto one_minus_z = one - TruncatedSeries::z(n);
    const BiSeries head = lift_series<BiPoly>(one_minus_z.pow(-p.t));
    const BiSeries inner =
        lift_series<BiPoly>(TruncatedSeries::z(n) * one_minus_z.pow(-p.q)) * p.xval + BiSeries::one(n);
    const BiSeries g = head * inner.pow(p.y);
    return scaled(g[n], factorial(n));
}

void validate(const FamilyKind &kind)
{
    if (const auto *m = std::get_if<family::Meixner>(&kind)) {
        if (m->c.is_zero() || m->c.is_one()) {
            throw DomainError("Meixner parameter c must differ from 0 and 1, got " + m->c.str());
        }
        if (m->b.is_integer() && m->b.sign() <= 0) {
            throw DomainError("Meixner parameter b must not be 0, -1, -2, ..., got " + m->b.str());
        }
    }
}

MasterParams family_params(const FamilyKind &kind)
{
    // X = -2x + 2 for the Chebyshev/Gegenbauer cases.
    const BiPoly two_minus_2x = bi_constant(2) - scaled(bi_x(), Rational(2));
    return std::visit(
        overloaded{
            [&](const family::ChebyshevU &) {
                return MasterParams{two_minus_2x, bi_constant(-1), 2, 2};
            },
            // The first slot must be -2x+2, as for Chebyshev: only then does
            // the master generating function reduce to (1-2xz+z^2)^{-lambda}.
            [&](const family::Gegenbauer &g) {
                return MasterParams{two_minus_2x, bi_constant(-g.lambda), 2, Rational(2) * g.lambda};
            },
            [&](const family::Meixner &m) {
                return MasterParams{bi_constant((m.c - 1) / m.c), bi_x(), 1, m.b};
            },
            [&](const family::MittagLeffler &) {
                return MasterParams{bi_constant(2), bi_x(), 1, 0};
            },
            [&](const family::Pidduck &) {
                return MasterParams{bi_constant(2), bi_x(), 1, 1};
            },
        },
        kind);
}

bool is_egf_normalized(const FamilyKind &kind)
{
    return !std::holds_alternative<family::ChebyshevU>(kind) && !std::holds_alternative<family::Gegenbauer>(kind);
}

Poly family_polynomial(const FamilyKind &kind, unsigned n)
{
    validate(kind);
    Poly p = drop_y(master_polynomial(n, family_params(kind)));
    if (!is_egf_normalized(kind)) {
        p = p * (Rational(1) / factorial(n));
    }
    return p;
}

Poly gf_oracle(const FamilyKind &kind, unsigned n)
{
    validate(kind);
    const auto one = TruncatedSeries::one(n);
    const auto z = TruncatedSeries::z(n);
    const Poly x = Poly::variable();
    // 1 - 2xz + z^2
    const PolySeries cheb_den = lift_series<Poly>(one + z * z) - lift_series<Poly>(z) * scaled(x, Rational(2));
    // ((1+z)/(1-z))^x
    const auto ml = [&] { return lift_series<Poly>((one + z) / (one - z)).pow(x); };

    const PolySeries g = std::visit(
        overloaded{
            [&](const family::ChebyshevU &) { return cheb_den.reciprocal(); },
            [&](const family::Gegenbauer &gg) { return cheb_den.pow(-gg.lambda); },
            [&](const family::Meixner &m) {
                const auto ratio = (one - z.scaled_by(Rational(1) / m.c)) / (one - z);
                return lift_series<Poly>((one - z).pow(-m.b)) * lift_series<Poly>(ratio).pow(x);
            },
            [&](const family::MittagLeffler &) { return ml(); },
            [&](const family::Pidduck &) { return lift_series<Poly>((one - z).reciprocal()) * ml(); },
        },
        kind);
    return is_egf_normalized(kind) ? g[n] * factorial(n) : g[n];
}

std::vector<Rational> binomial_basis_coefficients(const FamilyKind &kind, unsigned n)
{
    validate(kind);
    const MasterParams p = family_params(kind);
    if (!(p.y == bi_x()) || p.xval.degree() > 0 || p.xval[0].degree() > 0) {
        throw DomainError(family_name(kind) + " has no binomial-basis expansion in x");
    }
    const Rational xval = p.xval[0][0];
    std::vector<Rational> out(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const Rational top = Rational(n - k) + p.t + Rational(k) * p.q - 1;
        out[k] = factorial(n) * umbral::binomial(top, n - k) * pow(xval, k);
    }
    return out;
}

Poly chebyshev_u(unsigned n)
{
    return family_polynomial(family::ChebyshevU{}, n);
}

Poly gegenbauer(unsigned n, const Rational &lambda)
{
    return family_polynomial(family::Gegenbauer{lambda}, n);
}

Poly meixner1(unsigned n, const Rational &b, const Rational &c)
{
    return family_polynomial(family::Meixner{b, c}, n);
}

Poly mittag_leffler(unsigned n)
{
    return family_polynomial(family::MittagLeffler{}, n);
}

Poly pidduck(unsigned n)
{
    return family_polynomial(family::Pidduck{}, n);
}

std::string family_name(const FamilyKind &kind)
{
    return std::visit(overloaded{
                          [](const family::ChebyshevU &) -> std::string { return "chebyshev-u"; },
                          [](const family::Gegenbauer &) -> std::string { return "gegenbauer"; },
                          [](const family::Meixner &) -> std::string { return "meixner"; },
                          [](const family::MittagLeffler &) -> std::string { return "mittag-leffler"; },
                          [](const family::Pidduck &) -> std::string { return "pidduck"; },
                      },
                      kind);
}

} // namespace umbral
