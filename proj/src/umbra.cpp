#include "umbral/umbra.hpp"

#include <sstream>
#include <type_traits>

namespace umbral
{

Umbra::Umbra(std::vector<Rational> moments) : moments_(std::move(moments))
{
    if (moments_.empty()) {
        throw DomainError("an umbra needs at least the moment m_0");
    }
    if (!moments_[0].is_one()) {
        throw DomainError("umbra moment m_0 must be 1, got " + moments_[0].str());
    }
}

Umbra augmentation(std::size_t order)
{
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    return Umbra(std::move(m));
}

Umbra singleton(std::size_t order)
{
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    if (order >= 1) {
        m[1] = 1;
    }
    return Umbra(std::move(m));
}

Umbra bell(std::size_t order)
{
    const auto e = TruncatedSeries::z(order).exp() - TruncatedSeries::one(order);
    return from_series(e.exp());
}

Umbra ubar(std::size_t order)
{
    return dot(dot_scalar(-1, singleton(order)), scalar(-1, order));
}

Umbra scalar(const Rational &a, std::size_t order)
{
    std::vector<Rational> m;
    m.reserve(order + 1);
    Rational p(1);
    for (std::size_t n = 0; n <= order; ++n) {
        m.push_back(p);
        p *= a;
    }
    return Umbra(std::move(m));
}

Umbra make_special(const SpecialUmbraKind &kind, std::size_t order)
{
    return std::visit(
        [order](const auto &k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, special::Augmentation>) {
                return augmentation(order);
            } else if constexpr (std::is_same_v<K, special::Singleton>) {
                return singleton(order);
            } else if constexpr (std::is_same_v<K, special::Bell>) {
                return bell(order);
            } else if constexpr (std::is_same_v<K, special::UBar>) {
                return ubar(order);
            } else {
                return scalar(k.value, order);
            }
        },
        kind);
}

Umbra from_series(const TruncatedSeries &f)
{
    if (!f[0].is_one()) {
        throw DomainError("generating function of an umbra must have constant term 1, got " + f[0].str());
    }
    std::vector<Rational> m;
    m.reserve(f.order() + 1);
    Rational fact(1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) {
            fact *= Rational(n);
        }
        m.push_back(f[n] * fact);
    }
    return Umbra(std::move(m));
}

TruncatedSeries gf(const Umbra &u)
{
    std::vector<Rational> c;
    c.reserve(u.order() + 1);
    Rational fact(1);
    for (std::size_t n = 0; n <= u.order(); ++n) {
        if (n > 0) {
            fact *= Rational(n);
        }
        c.push_back(u.moment(n) / fact);
    }
    return TruncatedSeries(std::move(c), u.order());
}

namespace
{

// Pascal rows 0..n as rationals.
std::vector<std::vector<Rational>> pascal(std::size_t n)
{
    std::vector<std::vector<Rational>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].resize(i + 1);
        rows[i][0] = 1;
        rows[i][i] = 1;
        for (std::size_t k = 1; k < i; ++k) {
            rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
        }
    }
    return rows;
}

std::vector<Rational> binomial_convolution(std::span<const Rational> a, std::span<const Rational> b)
{
    const std::size_t n = a.size() - 1;
    const auto c = pascal(n);
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            out[i] += c[i][k] * a[k] * b[i - k];
        }
    }
    return out;
}

// Cumulants from moments: m_n = sum_{k=1}^n C(n-1,k-1) kappa_k m_{n-k}.
std::vector<Rational> cumulants(const Umbra &u)
{
    const std::size_t n = u.order();
    const auto c = pascal(n);
    std::vector<Rational> kappa(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational acc = u.moment(i);
        for (std::size_t k = 1; k < i; ++k) {
            acc -= c[i - 1][k - 1] * kappa[k] * u.moment(i - k);
        }
        kappa[i] = acc;
    }
    return kappa;
}

} // namespace

Umbra add(const Umbra &u, const Umbra &v)
{
    check_same_order(u.order(), v.order());
    return Umbra(binomial_convolution(u.moments(), v.moments()));
}

// With g = f^a:  f g' = a f' g. Comparing coefficients of z^n/n! gives
//   g_{n+1} = a sum_{k=0}^n C(n,k) m_{k+1} g_{n-k} - sum_{k=1}^n C(n,k) m_k g_{n+1-k}.
Umbra dot_scalar(const Rational &a, const Umbra &u)
{
    const std::size_t order = u.order();
    const auto c = pascal(order);
    std::vector<Rational> g(order + 1);
    g[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        Rational lead, tail;
        for (std::size_t k = 0; k <= n; ++k) {
            lead += c[n][k] * u.moment(k + 1) * g[n - k];
        }
        for (std::size_t k = 1; k <= n; ++k) {
            tail += c[n][k] * u.moment(k) * g[n + 1 - k];
        }
        g[n + 1] = a * lead - tail;
    }
    return Umbra(std::move(g));
}

// m_n(g.u) = sum_k m_k(g) B_{n,k}(kappa_1(u), kappa_2(u), ...), with B the
// partial Bell polynomials in the cumulants of u.
Umbra dot(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    const std::size_t order = u.order();
    const auto c = pascal(order);
    const auto kappa = cumulants(u);
    // bell_rows[k][n] = B_{n,k}
    std::vector<std::vector<Rational>> b(order + 1, std::vector<Rational>(order + 1));
    b[0][0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t n = k; n <= order; ++n) {
            Rational acc;
            for (std::size_t i = 1; i + k - 1 <= n; ++i) {
                acc += c[n - 1][i - 1] * kappa[i] * b[k - 1][n - i];
            }
            b[k][n] = acc;
        }
    }
    std::vector<Rational> m(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            m[n] += g.moment(k) * b[k][n];
        }
    }
    return Umbra(std::move(m));
}

Umbra derivative_umbra(const Umbra &u)
{
    std::vector<Rational> m(u.order() + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= u.order(); ++n) {
        m[n] = Rational(n) * u.moment(n - 1);
    }
    return Umbra(std::move(m));
}

Umbra composition_umbra(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    const std::size_t order = u.order();
    const auto c = pascal(order);
    std::vector<Rational> m(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (g.moment(k).is_zero()) {
            continue;
        }
        const Umbra ku = dot_scalar(Rational(k), u);
        for (std::size_t n = k; n <= order; ++n) {
            m[n] += c[n][k] * g.moment(k) * ku.moment(n - k);
        }
    }
    return Umbra(std::move(m));
}

Umbra k_umbra(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    const std::size_t order = u.order();
    const auto c = pascal(order);
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        const Umbra nu = dot_scalar(-Rational(n), u);
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) {
            acc += c[n - 1][j] * g.moment(j + 1) * nu.moment(n - 1 - j);
        }
        m[n] = acc;
    }
    return Umbra(std::move(m));
}

// Write f_u(z) - 1 = a z f_w(z) with a = m_1(u) and w the umbra of
// (f_u(z) - 1) / (a z). Then (f_u - 1)^<-1>(z) = (z f_w)^<-1>(z / a), and
// (z f_w)^<-1> = f_K - 1 with K = K_{chi,w} by Lagrange inversion.
Umbra inverse_umbra(const Umbra &u)
{
    const std::size_t order = u.order();
    const Rational a = order >= 1 ? u.moment(1) : Rational(1);
    if (a.is_zero()) {
        throw DomainError("umbra with m_1 = 0 has no compositional inverse");
    }
    // m_n(w) = m_{n+1}(u) / ((n+1) a); the top moment is not determined by
    // u at this order, but K_{chi,w} only reads m_0..m_{N-1} of w.
    std::vector<Rational> wm(order + 1);
    wm[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        wm[n] = u.moment(n + 1) / (Rational(n + 1) * a);
    }
    const Umbra k = k_umbra(singleton(order), Umbra(std::move(wm)));
    std::vector<Rational> m(order + 1);
    m[0] = 1;
    const Rational inv_a = Rational(1) / a;
    Rational scale(1);
    for (std::size_t n = 1; n <= order; ++n) {
        scale *= inv_a;
        m[n] = k.moment(n) * scale;
    }
    return Umbra(std::move(m));
}

namespace via_series
{

Umbra add(const Umbra &u, const Umbra &v)
{
    return from_series(gf(u) * gf(v));
}

Umbra dot_scalar(const Rational &a, const Umbra &u)
{
    return from_series(gf(u).pow(a));
}

Umbra dot(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    return from_series(gf(g).compose(gf(u).log()));
}

Umbra derivative_umbra(const Umbra &u)
{
    return from_series(TruncatedSeries::one(u.order()) + gf(u).shift_up());
}

Umbra composition_umbra(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    return from_series(gf(g).compose(gf(u).shift_up()));
}

Umbra inverse_umbra(const Umbra &u)
{
    const auto one = TruncatedSeries::one(u.order());
    return from_series(one + (gf(u) - one).revert());
}

Umbra k_umbra(const Umbra &g, const Umbra &u)
{
    check_same_order(g.order(), u.order());
    return from_series(gf(g).compose(gf(u).shift_up().revert()));
}

} // namespace via_series

std::string to_string(const Umbra &u)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t n = 0; n <= u.order(); ++n) {
        os << (n ? ", " : "") << u.moment(n);
    }
    os << ']';
    return os.str();
}

} // namespace umbral
