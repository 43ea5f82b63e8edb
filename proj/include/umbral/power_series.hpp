#ifndef UMBRAL_POWER_SERIES_HPP
#define UMBRAL_POWER_SERIES_HPP

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "umbral/errors.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral
{

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over a
// coefficient ring R. The truncation order N is part of the value and every
// binary operation requires both operands to share it.
template <typename R>
class Series
{
public:
    using coefficient_type = R;

    explicit Series(std::size_t order) : coeffs_(order + 1)
    {
    }

    // Pads with zeros or truncates so that exactly order+1 coefficients remain.
    Series(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static Series constant(R c, std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    static Series one(std::size_t order)
    {
        return constant(one_of(R{}), order);
    }
    // The series z (just 0 when N = 0).
    static Series z(std::size_t order)
    {
        Series s(order);
        if (order >= 1) {
            s.coeffs_[1] = one_of(R{});
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const
    {
        return coeffs_.size() - 1;
    }
    [[nodiscard]] const R &operator[](std::size_t i) const
    {
        return coeffs_.at(i);
    }
    [[nodiscard]] const std::vector<R> &coefficients() const
    {
        return coeffs_;
    }

    Series &operator+=(const Series &o)
    {
        check_same_order(order(), o.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        check_same_order(order(), o.order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b)
    {
        return a += b;
    }
    friend Series operator-(Series a, const Series &b)
    {
        return a -= b;
    }
    friend Series operator-(Series a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    // Cauchy product truncated at N.
    friend Series operator*(const Series &a, const Series &b)
    {
        check_same_order(a.order(), b.order());
        const std::size_t n = a.order();
        Series out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero_value(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    // Coefficient-wise multiplication by a ring element.
    friend Series operator*(Series a, const R &c)
    {
        for (auto &x : a.coeffs_) {
            x = x * c;
        }
        return a;
    }
    friend Series operator*(const R &c, Series a)
    {
        return std::move(a) * c;
    }

    friend Series operator/(const Series &a, const Series &b)
    {
        return a * b.reciprocal();
    }

    friend bool operator==(const Series &a, const Series &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    [[nodiscard]] Series scaled_by(const Rational &r) const
    {
        Series out(*this);
        for (auto &c : out.coeffs_) {
            c = scaled(c, r);
        }
        return out;
    }

    [[nodiscard]] Series derivative() const
    {
        Series out(order());
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            out.coeffs_[i - 1] = scaled(coeffs_[i], Rational(i));
        }
        return out;
    }

    // Multiplies by z, dropping the coefficient pushed past N.
    [[nodiscard]] Series shift_up() const
    {
        Series out(order());
        for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
            out.coeffs_[i + 1] = coeffs_[i];
        }
        return out;
    }

    // Divides by z; requires c_0 = 0. The top coefficient becomes zero, so the
    // result is exact only through degree N-1.
    [[nodiscard]] Series shift_down() const
    {
        if (!is_zero_value(coeffs_[0])) {
            throw DomainError("series with nonzero constant term is not divisible by z");
        }
        Series out(order());
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            out.coeffs_[i - 1] = coeffs_[i];
        }
        return out;
    }

    // Changes the truncation order (padding with zeros when growing).
    [[nodiscard]] Series with_order(std::size_t order) const
    {
        return Series(coeffs_, order);
    }

    // Multiplicative inverse; c_0 must be a unit of R.
    [[nodiscard]] Series reciprocal() const
    {
        const R inv0 = unit_inverse(coeffs_[0]);
        Series out(order());
        out.coeffs_[0] = inv0;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            R acc{};
            for (std::size_t k = 1; k <= n; ++k) {
                acc += coeffs_[k] * out.coeffs_[n - k];
            }
            out.coeffs_[n] = -(acc * inv0);
        }
        return out;
    }

    // exp(f) for c_0 = 0, from g' = f' g:  n g_n = sum_{k=1}^n k f_k g_{n-k}.
    [[nodiscard]] Series exp() const
    {
        if (!is_zero_value(coeffs_[0])) {
            throw DomainError("exp requires a zero constant term");
        }
        Series g(order());
        g.coeffs_[0] = one_of(R{});
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            R acc{};
            for (std::size_t k = 1; k <= n; ++k) {
                if (!is_zero_value(coeffs_[k])) {
                    acc += scaled(coeffs_[k], Rational(k)) * g.coeffs_[n - k];
                }
            }
            g.coeffs_[n] = scaled(acc, Rational(1, n));
        }
        return g;
    }

    // log(f) for c_0 = 1, from f' = g' f:  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
    [[nodiscard]] Series log() const
    {
        if (!(coeffs_[0] == one_of(R{}))) {
            throw DomainError("log requires constant term 1");
        }
        Series g(order());
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            R acc = scaled(coeffs_[n], Rational(n));
            for (std::size_t k = 1; k < n; ++k) {
                acc -= scaled(g.coeffs_[k], Rational(k)) * coeffs_[n - k];
            }
            g.coeffs_[n] = scaled(acc, Rational(1, n));
        }
        return g;
    }

    // f^a = exp(a log f) for c_0 = 1.
    [[nodiscard]] Series pow(const Rational &a) const
    {
        return log().scaled_by(a).exp();
    }

    // f^a for a ring-valued exponent (e.g. a polynomial in x), c_0 = 1.
    [[nodiscard]] Series pow(const R &a) const
        requires(!std::is_same_v<R, Rational>)
    {
        return (log() * a).exp();
    }

    // f(g(z)) with g_0 = 0, by Horner's scheme in g.
    [[nodiscard]] Series compose(const Series &inner) const
    {
        check_same_order(order(), inner.order());
        if (!is_zero_value(inner.coeffs_[0])) {
            throw DomainError("compose requires an inner series with zero constant term");
        }
        Series acc(order());
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * inner;
            acc.coeffs_[0] += coeffs_[i];
        }
        return acc;
    }

    // Compositional inverse g with f(g(z)) = z, for c_0 = 0 and c_1 a unit.
    // Solved degree by degree: once g_1..g_{n-1} are fixed, [z^n] f(g) is
    // affine in g_n with slope c_1.
    [[nodiscard]] Series revert() const
    {
        if (!is_zero_value(coeffs_[0])) {
            throw DomainError("series with nonzero constant term is not invertible under composition");
        }
        if (order() == 0) {
            return Series(0);
        }
        if (is_zero_value(coeffs_[1])) {
            throw DomainError("series with zero linear term is not invertible under composition");
        }
        const R inv1 = unit_inverse(coeffs_[1]);
        Series g(order());
        g.coeffs_[1] = inv1;
        for (std::size_t n = 2; n < coeffs_.size(); ++n) {
            const Series trial = compose(g);
            g.coeffs_[n] = -(trial.coeffs_[n] * inv1);
        }
        return g;
    }

private:
    std::vector<R> coeffs_;
};

using TruncatedSeries = Series<Rational>;
// Series whose coefficients are polynomials in x (e.g. e^{x z B(z)}).
using PolySeries = Series<Poly>;

// Embeds a rational series into a series with polynomial coefficients.
template <typename R>
Series<R> lift_series(const TruncatedSeries &s)
{
    std::vector<R> out;
    out.reserve(s.coefficients().size());
    for (const auto &c : s.coefficients()) {
        out.push_back(constant_of<R>(c));
    }
    return Series<R>(std::move(out), s.order());
}

} // namespace umbral

#endif
