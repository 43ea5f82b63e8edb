#include "umbral/umbral_poly.hpp"

#include <string>

namespace umbral
{

UmbralSymbol Alphabet::fresh(Umbra binding)
{
    bindings_.push_back(std::move(binding));
    return UmbralSymbol{static_cast<std::uint32_t>(bindings_.size() + 1)};
}

const Umbra &Alphabet::binding(UmbralSymbol s) const
{
    if (s.is_formal_variable() || s.id - 2 >= bindings_.size()) {
        throw DomainError("symbol " + std::to_string(s.id) + " is not bound in this alphabet");
    }
    return bindings_[s.id - 2];
}

UmbralPolynomial::UmbralPolynomial(const Rational &c)
{
    add_term({}, c);
}

UmbralPolynomial::UmbralPolynomial(UmbralSymbol s)
{
    add_term({{s.id, 1}}, Rational(1));
}

void UmbralPolynomial::add_term(const Monomial &m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

UmbralPolynomial &UmbralPolynomial::operator+=(const UmbralPolynomial &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

UmbralPolynomial &UmbralPolynomial::operator-=(const UmbralPolynomial &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

namespace
{

UmbralPolynomial::Monomial merge(const UmbralPolynomial::Monomial &a, const UmbralPolynomial::Monomial &b)
{
    UmbralPolynomial::Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

UmbralPolynomial operator*(const UmbralPolynomial &a, const UmbralPolynomial &b)
{
    UmbralPolynomial out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            out.add_term(merge(ma, mb), ca * cb);
        }
    }
    return out;
}

UmbralPolynomial operator*(UmbralPolynomial a, const Rational &c)
{
    if (c.is_zero()) {
        return {};
    }
    for (auto &[m, coeff] : a.terms_) {
        coeff *= c;
    }
    return a;
}

UmbralPolynomial UmbralPolynomial::pow(unsigned n) const
{
    UmbralPolynomial result(Rational(1)), base = *this;
    while (n != 0) {
        if ((n & 1U) != 0) {
            result = result * base;
        }
        n >>= 1U;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

UmbralPolynomial UmbralPolynomial::formal_derivative(UmbralSymbol wrt) const
{
    UmbralPolynomial out;
    for (const auto &[m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != wrt.id) {
                continue;
            }
            Monomial d = m;
            const std::uint32_t e = d[i].second;
            if (e == 1) {
                d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                d[i].second = e - 1;
            }
            out.add_term(d, c * Rational(e));
        }
    }
    return out;
}

BiPoly evaluate_xy(const UmbralPolynomial &p, const Alphabet &alphabet)
{
    std::vector<std::vector<Rational>> grid; // grid[y-degree][x-degree]
    for (const auto &[m, c] : p.terms()) {
        Rational value = c;
        std::size_t dx = 0, dy = 0;
        for (const auto &[id, e] : m) {
            const UmbralSymbol s{id};
            if (s == var_x) {
                dx = e;
            } else if (s == var_y) {
                dy = e;
            } else {
                const Umbra &u = alphabet.binding(s);
                if (e > u.order()) {
                    throw DomainError("exponent " + std::to_string(e) + " exceeds moment order " +
                                      std::to_string(u.order()) + " of symbol " + std::to_string(id));
                }
                value *= u.moment(e);
            }
        }
        if (grid.size() <= dy) {
            grid.resize(dy + 1);
        }
        if (grid[dy].size() <= dx) {
            grid[dy].resize(dx + 1);
        }
        grid[dy][dx] += value;
    }
    std::vector<Poly> rows;
    rows.reserve(grid.size());
    for (auto &row : grid) {
        rows.emplace_back(std::move(row));
    }
    return BiPoly(std::move(rows));
}

Poly evaluate(const UmbralPolynomial &p, const Alphabet &alphabet)
{
    return drop_y(evaluate_xy(p, alphabet));
}

UmbralPolynomial abel_polynomial(Alphabet &alphabet, unsigned n, const UmbralPolynomial &gamma, const Umbra &alpha)
{
    if (n == 0) {
        return UmbralPolynomial(Rational(1));
    }
    const UmbralSymbol n_alpha = alphabet.fresh(dot_scalar(Rational(n), alpha));
    return gamma * (gamma + UmbralPolynomial(n_alpha)).pow(n - 1);
}

Poly abel(unsigned n, const Umbra &alpha)
{
    if (n > alpha.order()) {
        throw DomainError("Abel polynomial of degree " + std::to_string(n) + " needs umbra order >= n");
    }
    Alphabet a;
    return evaluate(abel_polynomial(a, n, UmbralPolynomial::x(), alpha), a);
}

Rational abel(unsigned n, const Umbra &gamma, const Umbra &alpha)
{
    if (n > alpha.order()) {
        throw DomainError("Abel polynomial of degree " + std::to_string(n) + " needs umbra order >= n");
    }
    Alphabet a;
    const UmbralSymbol g = a.fresh(gamma);
    return evaluate(abel_polynomial(a, n, UmbralPolynomial(g), alpha), a)[0];
}

} // namespace umbral
