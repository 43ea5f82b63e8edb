#ifndef UMBRAL_POLYNOMIAL_HPP
#define UMBRAL_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral
{

// Dense univariate polynomial over a commutative coefficient ring R. Used
// with R = Rational (polynomials in x) and R = Polynomial<Rational>
// (bivariate polynomials: outer variable y, coefficients in x).
//
// Coefficients are stored lowest degree first with no trailing zeros, so
// the zero polynomial has an empty coefficient vector and degree -1.
template <typename R>
class Polynomial
{
public:
    using coefficient_type = R;

    Polynomial() = default;

    explicit Polynomial(R constant)
    {
        coeffs_.push_back(std::move(constant));
        trim();
    }

    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs)
    {
        trim();
    }

    // The indeterminate itself.
    static Polynomial variable()
    {
        return Polynomial(std::vector<R>{R{}, one_of(R{})});
    }

    static Polynomial monomial(R c, std::size_t degree)
    {
        std::vector<R> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    [[nodiscard]] long degree() const
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    [[nodiscard]] bool is_zero() const
    {
        return coeffs_.empty();
    }
    [[nodiscard]] const std::vector<R> &coefficients() const
    {
        return coeffs_;
    }

    // Coefficient of the i-th power; zero beyond the degree.
    [[nodiscard]] R operator[](std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : R{};
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial &operator*=(const Polynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }
    // Scalar multiplication by an element of the coefficient ring.
    friend Polynomial operator*(Polynomial a, const R &c)
    {
        for (auto &x : a.coeffs_) {
            x *= c;
        }
        a.trim();
        return a;
    }
    friend Polynomial operator*(const R &c, Polynomial a)
    {
        return std::move(a) * c;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    // Ring-valued multiplication hook so nested polynomials compose.
    Polynomial &operator*=(const R &c)
    {
        *this = *this * c;
        return *this;
    }

    // Horner evaluation at any value of a ring S that R-scalars act on.
    template <typename S>
    [[nodiscard]] S evaluate(const S &at) const
    {
        S acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + lift_to(*it, at);
        }
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<R> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            out[i - 1] = scaled(coeffs_[i], Rational(i));
        }
        return Polynomial(std::move(out));
    }

private:
    // Constant embedding of a coefficient into the evaluation ring.
    template <typename S, typename C>
    static S lift_to(const C &c, const S & /*tag*/)
    {
        if constexpr (std::is_same_v<S, C>) {
            return c;
        } else {
            return S(lift_to(c, typename S::coefficient_type{}));
        }
    }

    void trim()
    {
        while (!coeffs_.empty() && is_zero_value(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<R> coeffs_;
};

// Ring helpers shared by the polynomial and series templates. They exist as
// overload sets so that Rational and nested polynomial coefficients are
// handled uniformly.
inline Rational one_of(const Rational &)
{
    return Rational(1);
}
template <typename S>
Polynomial<S> one_of(const Polynomial<S> &)
{
    return Polynomial<S>(one_of(S{}));
}

inline bool is_zero_value(const Rational &r)
{
    return r.is_zero();
}
template <typename S>
bool is_zero_value(const Polynomial<S> &p)
{
    return p.is_zero();
}

inline Rational scaled(const Rational &a, const Rational &r)
{
    return a * r;
}
template <typename S>
Polynomial<S> scaled(const Polynomial<S> &p, const Rational &r)
{
    std::vector<S> out;
    out.reserve(p.coefficients().size());
    for (const auto &c : p.coefficients()) {
        out.push_back(scaled(c, r));
    }
    return Polynomial<S>(std::move(out));
}

// Inverse of a unit of the ring: nonzero rationals, or constant polynomials
// whose constant is itself a unit.
inline Rational unit_inverse(const Rational &r)
{
    if (r.is_zero()) {
        throw DomainError("zero is not invertible");
    }
    return Rational(1) / r;
}
template <typename S>
Polynomial<S> unit_inverse(const Polynomial<S> &p)
{
    if (p.degree() != 0) {
        throw DomainError("non-constant polynomial is not invertible");
    }
    return Polynomial<S>(unit_inverse(p[0]));
}

// Embeds a rational as a constant of the ring.
template <typename R>
R constant_of(const Rational &r)
{
    if constexpr (std::is_same_v<R, Rational>) {
        return r;
    } else {
        return R(constant_of<typename R::coefficient_type>(r));
    }
}

using Poly = Polynomial<Rational>;
// Bivariate polynomial: index j holds the coefficient of y^j as a polynomial in x.
using BiPoly = Polynomial<Poly>;

// p(x) viewed as a bivariate polynomial independent of y.
BiPoly in_x(const Poly &p);
// p(y) viewed as a bivariate polynomial independent of x.
BiPoly in_y(const Poly &p);
// p(x + y).
BiPoly at_x_plus_y(const Poly &p);
// Projects a bivariate polynomial free of y back to a polynomial in x.
Poly drop_y(const BiPoly &p);

// Human-readable rendering, highest degree first, e.g. "4x^2 - 1".
std::string to_string(const Poly &p, const std::string &var = "x");
std::string to_string(const BiPoly &p);

} // namespace umbral

#endif
