#ifndef UMBRAL_RATIONAL_HPP
#define UMBRAL_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "umbral/errors.hpp"

namespace umbral
{

// Exact rational number backed by GMP. Values are canonical after every
// operation (positive denominator, coprime parts), so equality is structural.
class Rational
{
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) // NOLINT(google-explicit-constructor)
    {
        assign_integer(n);
    }

    template <std::integral T, std::integral U>
    Rational(T num, U den)
    {
        if (den == 0) {
            throw DomainError("rational with zero denominator");
        }
        mpz_class a, b;
        set_integer(a, num);
        set_integer(b, den);
        value_ = mpq_class(a, b);
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v))
    {
        value_.canonicalize();
    }

    // Accepts "p", "-p", "p/q"; throws ParseError on anything else.
    static Rational parse(std::string_view text);

    // "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] bool is_zero() const
    {
        return sgn(value_) == 0;
    }
    [[nodiscard]] bool is_one() const
    {
        return value_ == 1;
    }
    [[nodiscard]] bool is_integer() const
    {
        return value_.get_den() == 1;
    }
    [[nodiscard]] int sign() const
    {
        return sgn(value_);
    }
    [[nodiscard]] const mpq_class &raw() const
    {
        return value_;
    }

    // Only meaningful when is_integer() and the value fits.
    [[nodiscard]] long to_long() const;

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DomainError("division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(mpq_class(-a.value_));
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    template <std::integral T>
    static void set_integer(mpz_class &out, T n)
    {
        if constexpr (std::is_signed_v<T>) {
            if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max()) {
                out = static_cast<long>(n);
            } else {
                out = std::to_string(n);
            }
        } else {
            if (n <= std::numeric_limits<unsigned long>::max()) {
                out = static_cast<unsigned long>(n);
            } else {
                out = std::to_string(n);
            }
        }
    }

    template <std::integral T>
    void assign_integer(T n)
    {
        mpz_class z;
        set_integer(z, n);
        value_ = mpq_class(z);
    }

    mpq_class value_;
};

// Integer power; negative exponents invert (zero base then throws).
Rational pow(const Rational &base, long exponent);

Rational factorial(unsigned n);

// top (top-1) ... (top-k+1); 1 when k == 0.
Rational falling_factorial(const Rational &top, unsigned k);

// Generalized binomial coefficient, defined for any rational top.
Rational binomial(const Rational &top, unsigned k);

} // namespace umbral

#endif
