#ifndef UMBRAL_UMBRA_HPP
#define UMBRAL_UMBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "umbral/power_series.hpp"
#include "umbral/rational.hpp"

namespace umbral
{

// An umbra, represented by its moment sequence m_0 = 1, m_1, ..., m_N.
// The generating function is f(z) = sum m_n z^n / n!.
class Umbra
{
public:
    // Throws DomainError unless moments is non-empty with moments[0] == 1.
    explicit Umbra(std::vector<Rational> moments);

    [[nodiscard]] std::size_t order() const
    {
        return moments_.size() - 1;
    }
    [[nodiscard]] const Rational &moment(std::size_t n) const
    {
        return moments_.at(n);
    }
    [[nodiscard]] std::span<const Rational> moments() const
    {
        return moments_;
    }

    friend bool operator==(const Umbra &, const Umbra &) = default;

private:
    std::vector<Rational> moments_;
};

namespace special
{
struct Augmentation {
};
struct Singleton {
};
struct Bell {
};
// -1.chi.-1, the umbra of 1/(1-z).
struct UBar {
};
struct Scalar {
    Rational value;
};
} // namespace special

using SpecialUmbraKind = std::variant<special::Augmentation, special::Singleton, special::Bell, special::UBar, special::Scalar>;

Umbra make_special(const SpecialUmbraKind &kind, std::size_t order);

Umbra augmentation(std::size_t order);
Umbra singleton(std::size_t order);
// Built from exp(e^z - 1) at the requested order.
Umbra bell(std::size_t order);
Umbra ubar(std::size_t order);
Umbra scalar(const Rational &a, std::size_t order);

// m_n = n! [z^n] f; requires f_0 = 1.
Umbra from_series(const TruncatedSeries &f);
TruncatedSeries gf(const Umbra &u);

// The operations below compute moments combinatorially. Each has a
// generating-function counterpart in namespace via_series used as an
// independent cross-check.

// u' + v'' for distinct umbrae: binomial convolution of the moments.
Umbra add(const Umbra &u, const Umbra &v);
// a.u, generating function f_u(z)^a.
Umbra dot_scalar(const Rational &a, const Umbra &u);
// g.u, generating function f_g(log f_u(z)).
Umbra dot(const Umbra &g, const Umbra &u);
// u_D: moments n m_{n-1}(u), generating function 1 + z f_u(z).
Umbra derivative_umbra(const Umbra &u);
// g.beta.u_D, generating function f_g(z f_u(z)); moments by the binomial-like
// expansion sum_k C(n,k) m_k(g) E[(k.u)^{n-k}].
Umbra composition_umbra(const Umbra &g, const Umbra &u);
// Compositional inverse: f - 1 = (f_u - 1)^<-1>. Requires m_1(u) != 0.
Umbra inverse_umbra(const Umbra &u);
// K_{g,u}: m_0 = 1, m_n = E[g (g - n.u)^{n-1}].
Umbra k_umbra(const Umbra &g, const Umbra &u);

namespace via_series
{
Umbra add(const Umbra &u, const Umbra &v);
Umbra dot_scalar(const Rational &a, const Umbra &u);
Umbra dot(const Umbra &g, const Umbra &u);
Umbra derivative_umbra(const Umbra &u);
Umbra composition_umbra(const Umbra &g, const Umbra &u);
Umbra inverse_umbra(const Umbra &u);
// f_g((z f_u(z))^<-1>), the series reversion route to the K-umbra.
Umbra k_umbra(const Umbra &g, const Umbra &u);
} // namespace via_series

std::string to_string(const Umbra &u);

} // namespace umbral

#endif
