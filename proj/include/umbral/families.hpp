#ifndef UMBRAL_FAMILIES_HPP
#define UMBRAL_FAMILIES_HPP

#include <string>
#include <variant>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral
{

// Parameters of the master polynomial
//   P_n(X, Y; q, t) = n! sum_k C(n-k+t+kq-1, n-k) C(Y, k) X^k,
// the moments of t.ubar + Y.chi.X.beta.(q.ubar)_D. Both slots are bivariate
// polynomials in (x, y): the free master uses X = x, Y = y, and the family
// specializations substitute e.g. X = -2x+2, Y = -1 or X = 2, Y = x.
struct MasterParams {
    BiPoly xval;
    BiPoly y;
    Rational q;
    Rational t;

    // X = x, Y = y.
    static MasterParams free(const Rational &q, const Rational &t);
};

BiPoly master_polynomial(unsigned n, const MasterParams &p);

// n! [z^n] (1-z)^{-t} (1 + X z / (1-z)^q)^Y, expanded with bivariate
// polynomial coefficients.
BiPoly master_via_gf(unsigned n, const MasterParams &p);

namespace family
{
struct ChebyshevU {
};
struct Gegenbauer {
    Rational lambda;
};
// Meixner polynomials of the first kind; requires c not in {0, 1} and b not
// in {0, -1, -2, ...}.
struct Meixner {
    Rational b;
    Rational c;
};
struct MittagLeffler {
};
struct Pidduck {
};
} // namespace family

using FamilyKind = std::variant<family::ChebyshevU, family::Gegenbauer, family::Meixner, family::MittagLeffler, family::Pidduck>;

// Throws DomainError for invalid Meixner parameters.
void validate(const FamilyKind &kind);

// Master-polynomial substitution realizing the family. No validation.
MasterParams family_params(const FamilyKind &kind);

// Chebyshev and Gegenbauer have ordinary generating functions, the others
// exponential ones.
bool is_egf_normalized(const FamilyKind &kind);

// Explicit-sum route: the master polynomial under family_params, divided by n!
// for ordinary-gf families.
Poly family_polynomial(const FamilyKind &kind, unsigned n);

// Coefficient of z^n (times n! for egf families) of the family's generating
// function, computed purely by series arithmetic over Q[x].
Poly gf_oracle(const FamilyKind &kind, unsigned n);

// Coefficients of family_polynomial in the basis C(x,k), k = 0..n. Only for
// the families whose second master slot is x (Meixner, Mittag-Leffler,
// Pidduck).
std::vector<Rational> binomial_basis_coefficients(const FamilyKind &kind, unsigned n);

Poly chebyshev_u(unsigned n);
Poly gegenbauer(unsigned n, const Rational &lambda);
Poly meixner1(unsigned n, const Rational &b, const Rational &c);
Poly mittag_leffler(unsigned n);
Poly pidduck(unsigned n);

// C(p, k) = p (p-1) ... (p-k+1) / k! for a polynomial argument.
BiPoly binomial(const BiPoly &top, unsigned k);

std::string family_name(const FamilyKind &kind);

} // namespace umbral

#endif
