#include "support.hpp"

#include "umbral/errors.hpp"
#include "umbral/random_umbra.hpp"

using support::series;
using umbral::Rational;
using umbral::TruncatedSeries;

namespace
{

TruncatedSeries exp_z(std::size_t order)
{
    std::vector<Rational> c;
    for (unsigned n = 0; n <= order; ++n) {
        c.push_back(Rational(1) / umbral::factorial(n));
    }
    return TruncatedSeries(c, order);
}

// n! [z^n] of a series, as a vector.
std::vector<Rational> egf_numbers(const TruncatedSeries &f)
{
    std::vector<Rational> out;
    for (unsigned n = 0; n <= f.order(); ++n) {
        out.push_back(f[n] * umbral::factorial(n));
    }
    return out;
}

TruncatedSeries random_series(umbral::UmbraGenerator &gen, std::size_t order, const Rational &c0)
{
    std::vector<Rational> c{c0};
    for (std::size_t n = 1; n <= order; ++n) {
        c.push_back(gen.rational(3, 3));
    }
    return TruncatedSeries(c, order);
}

} // namespace

TEST_CASE("multiplication")
{
    const auto one_plus_z = series({1, 1}, 3);
    CHECK(one_plus_z * one_plus_z == series({1, 2, 1, 0}, 3));
    CHECK(one_plus_z * TruncatedSeries::one(3) == one_plus_z);
    CHECK(series({1, -1}, 3) * series({1, 1, 1, 1}, 3) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(series({1}, 3) * series({1}, 4), umbral::OrderMismatch);
}

TEST_CASE("exp")
{
    CHECK(TruncatedSeries::z(3).exp() == series({1, 1, Rational(1, 2), Rational(1, 6)}, 3));
    CHECK(TruncatedSeries(3).exp() == TruncatedSeries::one(3));
    CHECK_THROWS_AS(TruncatedSeries::one(3).exp(), umbral::DomainError);

    // Bell numbers, against sum_k (e^z - 1)^k / k! expanded term by term.
    const std::size_t n = 4;
    const auto inner = exp_z(n) - TruncatedSeries::one(n);
    TruncatedSeries oracle = TruncatedSeries::one(n), power = TruncatedSeries::one(n);
    for (unsigned k = 1; k <= n; ++k) {
        power = power * inner;
        oracle = oracle + power.scaled_by(Rational(1) / umbral::factorial(k));
    }
    const auto bell = inner.exp();
    CHECK(bell == oracle);
    CHECK(egf_numbers(bell) == std::vector<Rational>{1, 1, 2, 5, 15});
}

TEST_CASE("log")
{
    CHECK(series({1, 1}, 3).log() == series({0, 1, Rational(-1, 2), Rational(1, 3)}, 3));
    const auto z = TruncatedSeries::z(5);
    CHECK((z * (TruncatedSeries::one(5) + z)).exp().log() == series({0, 1, 1}, 5));
    CHECK(TruncatedSeries::one(3).log() == TruncatedSeries(3));
    CHECK_THROWS_AS(series({2, 1}, 3).log(), umbral::DomainError);
}

TEST_CASE("rational powers")
{
    CHECK(series({1, 1}, 3).pow(Rational(-1)) == series({1, -1, 1, -1}, 3));
    CHECK(series({1, 5, 7}, 3).pow(Rational(0)) == TruncatedSeries::one(3));
    // generalized binomial theorem: (1-z)^{-1/2} = sum C(-1/2,k) (-z)^k
    std::vector<Rational> c;
    for (unsigned k = 0; k <= 2; ++k) {
        c.push_back(umbral::binomial(Rational(-1, 2), k) * umbral::pow(Rational(-1), k));
    }
    const auto half = series({1, -1}, 2).pow(Rational(-1, 2));
    CHECK(half == TruncatedSeries(c, 2));
    CHECK(half == series({1, Rational(1, 2), Rational(3, 8)}, 2));
}

TEST_CASE("composition")
{
    const std::size_t n = 3;
    const auto f = series({1, 2, 3, 4}, n);
    CHECK(f.compose(TruncatedSeries::z(n)) == f);

    // ordered Bell numbers against sum_k (e^z - 1)^k
    const auto inner = exp_z(n) - TruncatedSeries::one(n);
    TruncatedSeries oracle = TruncatedSeries::one(n), power = TruncatedSeries::one(n);
    for (unsigned k = 1; k <= n; ++k) {
        power = power * inner;
        oracle = oracle + power;
    }
    const auto geometric = series({1, -1}, n).reciprocal();
    CHECK(geometric.compose(inner) == oracle);
    CHECK(geometric.compose(inner) == series({1, 1, Rational(3, 2), Rational(13, 6)}, n));

    const auto log1p = series({1, 1}, 6).log();
    CHECK(exp_z(6).compose(log1p) == series({1, 1}, 6));
    CHECK_THROWS_AS(f.compose(f), umbral::DomainError);
}

TEST_CASE("reversion")
{
    CHECK(TruncatedSeries::z(4).revert() == TruncatedSeries::z(4));

    // Catalan numbers by fixed-point iteration g <- z + g^2
    const std::size_t n = 4;
    TruncatedSeries g(n);
    for (std::size_t i = 0; i <= n; ++i) {
        g = TruncatedSeries::z(n) + g * g;
    }
    const auto catalan = series({0, 1, -1}, n).revert();
    CHECK(catalan == g);
    CHECK(catalan == series({0, 1, 1, 2, 5}, n));
    CHECK(series({0, 1, -1}, n).compose(catalan) == TruncatedSeries::z(n));
    CHECK(series({0, 1, 1}, n).revert() == series({0, 1, -1, 2, -5}, n));

    CHECK_THROWS_AS(series({1, 1}, n).revert(), umbral::DomainError);
    CHECK_THROWS_AS(series({0, 0, 1}, n).revert(), umbral::DomainError);
}

TEST_CASE("property: exp/log, reciprocal and reversion round-trips")
{
    umbral::UmbraGenerator gen(5);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 8;
        const auto f = random_series(gen, n, 1);
        const auto g = random_series(gen, n, 0);
        CHECK(f.log().exp() == f);
        CHECK(g.exp().log() == g);
        CHECK(f * f.reciprocal() == TruncatedSeries::one(n));
        CHECK(f.pow(Rational(1, 2)) * f.pow(Rational(1, 2)) == f);
        CHECK(f.pow(Rational(2, 3)) * f.pow(Rational(1, 3)) == f);
        auto h = g;
        if (h[1].is_zero()) {
            h = h + TruncatedSeries::z(n);
        }
        CHECK(h.compose(h.revert()) == TruncatedSeries::z(n));
        CHECK(h.revert().compose(h) == TruncatedSeries::z(n));
        CHECK((f * f).derivative().with_order(n - 1) == (f.derivative() * f).scaled_by(2).with_order(n - 1));
    }
}

TEST_CASE("shifts and order changes")
{
    const auto f = series({0, 1, 2, 3}, 3);
    CHECK(f.shift_down() == series({1, 2, 3, 0}, 3));
    CHECK(f.shift_down().shift_up() == f);
    CHECK_THROWS_AS(series({1, 1}, 3).shift_down(), umbral::DomainError);
    CHECK(f.with_order(1) == series({0, 1}, 1));
    CHECK(f.with_order(5) == series({0, 1, 2, 3, 0, 0}, 5));
}
