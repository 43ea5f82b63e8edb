#include "umbral/sheffer_riordan.hpp"

#include "umbral/power_series.hpp"
#include "umbral/umbral_poly.hpp"

namespace umbral
{

UmbraPair::UmbraPair(Umbra gamma, Umbra alpha) : gamma_(std::move(gamma)), alpha_(std::move(alpha))
{
    check_same_order(gamma_.order(), alpha_.order());
}

UmbraPair UmbraPair::identity(std::size_t order)
{
    return {augmentation(order), augmentation(order)};
}

const char *to_string(Flavor f)
{
    return f == Flavor::exponential ? "exponential" : "ordinary";
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    check_same_order(a.size(), b.size());
    const std::size_t n = a.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Rational> operator*(const Matrix &a, const std::vector<Rational> &v)
{
    check_same_order(a.size(), v.size());
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

namespace
{

// Row k holds the moments of gamma + k.alpha.
std::vector<Umbra> shifted_moments(const UmbraPair &pair)
{
    std::vector<Umbra> rows;
    rows.reserve(pair.order() + 1);
    for (std::size_t k = 0; k <= pair.order(); ++k) {
        rows.push_back(add(pair.gamma(), dot_scalar(Rational(k), pair.alpha())));
    }
    return rows;
}

Matrix exponential_entries(const UmbraPair &pair)
{
    const std::size_t n = pair.order();
    const auto rows = shifted_moments(pair);
    Matrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            m(i, k) = binomial(Rational(i), k) * rows[k].moment(i - k);
        }
    }
    return m;
}

Matrix rescale(const Matrix &m, bool to_ordinary)
{
    Matrix out(m.size());
    for (std::size_t n = 0; n < m.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational ratio = factorial(k) / factorial(n);
            out(n, k) = to_ordinary ? m(n, k) * ratio : m(n, k) / ratio;
        }
    }
    return out;
}

} // namespace

ShefferSequence sheffer_sequence(const UmbraPair &pair)
{
    const Matrix s = exponential_entries(pair);
    std::vector<Poly> polys;
    polys.reserve(pair.order() + 1);
    for (std::size_t n = 0; n <= pair.order(); ++n) {
        std::vector<Rational> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            c[k] = s(n, k);
        }
        polys.emplace_back(std::move(c));
    }
    return {pair, std::move(polys)};
}

ShefferSequence abel_representation(const UmbraPair &pair)
{
    const Umbra k_gamma = k_umbra(pair.gamma(), pair.alpha());
    const Umbra k_alpha = k_umbra(pair.alpha(), pair.alpha());
    std::vector<Poly> polys;
    polys.reserve(pair.order() + 1);
    for (std::size_t n = 0; n <= pair.order(); ++n) {
        if (n == 0) {
            polys.emplace_back(Rational(1));
            continue;
        }
        Alphabet a;
        const UmbralSymbol k = a.fresh(k_gamma);
        const UmbralPolynomial base = UmbralPolynomial::x() + UmbralPolynomial(k);
        const auto p = abel_polynomial(a, static_cast<unsigned>(n), base, k_alpha);
        polys.push_back(evaluate(p, a));
    }
    return {pair, std::move(polys)};
}

std::vector<Poly> sheffer_via_gf(const UmbraPair &pair)
{
    const std::size_t n = pair.order();
    const auto a = lift_series<Poly>(gf(pair.gamma()));
    const auto zb = lift_series<Poly>(gf(pair.alpha()).shift_up());
    const auto egf = a * (zb * Poly::variable()).exp();
    std::vector<Poly> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.push_back(egf[i] * factorial(static_cast<unsigned>(i)));
    }
    return out;
}

RiordanArray::RiordanArray(UmbraPair pair, Flavor flavor, Matrix entries)
    : pair_(std::move(pair)), flavor_(flavor), entries_(std::move(entries))
{
    check_same_order(pair_.order() + 1, entries_.size());
}

RiordanArray riordan_array(const UmbraPair &pair, Flavor flavor)
{
    Matrix m = exponential_entries(pair);
    if (flavor == Flavor::ordinary) {
        m = rescale(m, true);
    }
    return {pair, flavor, std::move(m)};
}

Matrix riordan_via_gf(const UmbraPair &pair)
{
    const std::size_t n = pair.order();
    const auto zb = gf(pair.alpha()).shift_up();
    auto column = gf(pair.gamma());
    Matrix m(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational inv_kfact = Rational(1) / factorial(static_cast<unsigned>(k));
        for (std::size_t i = 0; i <= n; ++i) {
            m(i, k) = factorial(static_cast<unsigned>(i)) * column[i] * inv_kfact;
        }
        column = column * zb;
    }
    return m;
}

UmbraPair umbral_compose(const UmbraPair &p, const UmbraPair &q)
{
    check_same_order(p.order(), q.order());
    return {add(p.gamma(), composition_umbra(q.gamma(), p.alpha())),
            add(p.alpha(), composition_umbra(q.alpha(), p.alpha()))};
}

RiordanArray riordan_multiply(const RiordanArray &a, const RiordanArray &b)
{
    if (a.flavor() != b.flavor()) {
        throw DomainError("cannot multiply Riordan arrays of different flavors");
    }
    check_same_order(a.order(), b.order());
    return {umbral_compose(a.pair(), b.pair()), a.flavor(), a.entries() * b.entries()};
}

RiordanArray riordan_inverse(const RiordanArray &a)
{
    const UmbraPair &p = a.pair();
    const UmbraPair inv(dot_scalar(-1, k_umbra(p.gamma(), p.alpha())), dot_scalar(-1, k_umbra(p.alpha(), p.alpha())));
    return riordan_array(inv, a.flavor());
}

Umbra ftra_apply(const RiordanArray &a, const Umbra &seq)
{
    if (a.flavor() != Flavor::exponential) {
        throw DomainError("the fundamental theorem applies to exponential Riordan arrays");
    }
    check_same_order(a.order(), seq.order());
    const std::vector<Rational> v(seq.moments().begin(), seq.moments().end());
    return Umbra(a.entries() * v);
}

Umbra ftra_umbral(const UmbraPair &pair, const Umbra &eta)
{
    return add(pair.gamma(), composition_umbra(eta, pair.alpha()));
}

RiordanArray flavor_convert(const RiordanArray &a)
{
    const bool to_ordinary = a.flavor() == Flavor::exponential;
    return {a.pair(), to_ordinary ? Flavor::ordinary : Flavor::exponential, rescale(a.entries(), to_ordinary)};
}

} // namespace umbral
