#ifndef UMBRAL_SHEFFER_RIORDAN_HPP
#define UMBRAL_SHEFFER_RIORDAN_HPP

#include <cstddef>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

// The pair (gamma, alpha) with f_gamma = A(z), f_alpha = B(z), A(0) = B(0) = 1.
class UmbraPair
{
public:
    UmbraPair(Umbra gamma, Umbra alpha);

    [[nodiscard]] const Umbra &gamma() const
    {
        return gamma_;
    }
    [[nodiscard]] const Umbra &alpha() const
    {
        return alpha_;
    }
    [[nodiscard]] std::size_t order() const
    {
        return gamma_.order();
    }

    // (eps, eps), the identity for umbral composition.
    static UmbraPair identity(std::size_t order);

    friend bool operator==(const UmbraPair &, const UmbraPair &) = default;

private:
    Umbra gamma_;
    Umbra alpha_;
};

struct ShefferSequence {
    UmbraPair pair;
    std::vector<Poly> polys; // s_0 .. s_N, s_n monic of degree n
};

// s_n(x) = sum_k C(n,k) E[(gamma + k.alpha)^{n-k}] x^k.
ShefferSequence sheffer_sequence(const UmbraPair &pair);

// s_n(x) = E[(x + K)(x + K + n.K_alpha)^{n-1}] with K = K_{gamma,alpha}
// correlated across both factors.
ShefferSequence abel_representation(const UmbraPair &pair);

// n! [z^n] A(z) e^{x z B(z)}, expanded with polynomial coefficients.
std::vector<Poly> sheffer_via_gf(const UmbraPair &pair);

enum class Flavor { exponential, ordinary };

const char *to_string(Flavor f);

// Dense square matrix of rationals; Riordan arrays only populate the lower triangle.
class Matrix
{
public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n)
    {
    }
    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const
    {
        return n_;
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * n_ + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * n_ + j];
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t n_;
    std::vector<Rational> data_;
};

std::vector<Rational> operator*(const Matrix &a, const std::vector<Rational> &v);

class RiordanArray
{
public:
    RiordanArray(UmbraPair pair, Flavor flavor, Matrix entries);

    [[nodiscard]] const UmbraPair &pair() const
    {
        return pair_;
    }
    [[nodiscard]] Flavor flavor() const
    {
        return flavor_;
    }
    [[nodiscard]] const Matrix &entries() const
    {
        return entries_;
    }
    [[nodiscard]] std::size_t order() const
    {
        return entries_.size() - 1;
    }
    [[nodiscard]] const Rational &operator()(std::size_t n, std::size_t k) const
    {
        return entries_(n, k);
    }

private:
    UmbraPair pair_;
    Flavor flavor_;
    Matrix entries_;
};

// Exponential: s_{n,k} = C(n,k) E[(gamma + k.alpha)^{n-k}].
// Ordinary: rescaled from the exponential array by k!/n!.
RiordanArray riordan_array(const UmbraPair &pair, Flavor flavor = Flavor::exponential);

// n! [z^n] A(z) (z B(z))^k / k!, by direct series expansion.
Matrix riordan_via_gf(const UmbraPair &pair);

// (gamma, alpha)(eta, delta) = (gamma + eta.beta.alpha_D, alpha + delta.beta.alpha_D).
UmbraPair umbral_compose(const UmbraPair &p, const UmbraPair &q);

// Matrix product; the result carries umbral_compose of the pairs.
RiordanArray riordan_multiply(const RiordanArray &a, const RiordanArray &b);

// Array of (-1.K_{gamma,alpha}, -1.K_alpha), in the flavor of the input.
RiordanArray riordan_inverse(const RiordanArray &a);

// Matrix-vector product of an exponential array with the moment vector of seq.
Umbra ftra_apply(const RiordanArray &a, const Umbra &seq);
// The umbra gamma + eta.beta.alpha_D predicted for ftra_apply.
Umbra ftra_umbral(const UmbraPair &pair, const Umbra &eta);

// Exponential <-> ordinary, scaling entry (n,k) by k!/n! or n!/k!.
RiordanArray flavor_convert(const RiordanArray &a);

} // namespace umbral

#endif
