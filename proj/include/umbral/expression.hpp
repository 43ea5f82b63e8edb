#ifndef UMBRAL_EXPRESSION_HPP
#define UMBRAL_EXPRESSION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

// Parsed umbra expression. Grammar (whitespace ignored between tokens):
//
//   expr     := atom | call
//   atom     := "eps" | "chi" | "bell" | "ubar"
//   call     := "scalar" "(" rational ")"
//             | "egf" "(" rational { "," rational } ")"      gf coefficients c_0, c_1, ...
//             | "moments" "(" rational { "," rational } ")"  moments m_0, m_1, ...
//             | "add" "(" expr "," expr ")"
//             | "dot" "(" expr "," expr ")"
//             | "dotscalar" "(" rational "," expr ")"
//             | "deriv" "(" expr ")"
//             | "inv" "(" expr ")"
//             | "comp" "(" expr "," expr ")"                 g.beta.u_D
//             | "k" "(" expr "," expr ")"                    K_{g,u}
//   rational := ["-"] digits [ "/" digits ]
struct UmbraExpr {
    std::string head;
    std::vector<Rational> numbers; // literal arguments (scalar, egf, moments, dotscalar)
    std::vector<UmbraExpr> args;   // umbra arguments
    std::size_t position = 0;      // offset of the head in the source text

    // Structural equality; source positions are ignored.
    friend bool operator==(const UmbraExpr &a, const UmbraExpr &b)
    {
        return a.head == b.head && a.numbers == b.numbers && a.args == b.args;
    }
};

// Throws ParseError carrying the offending offset.
UmbraExpr parse_umbra(std::string_view text);

// Canonical text form; parse_umbra(print(e)) == e.
std::string print(const UmbraExpr &e);

// Builds the umbra at the given order. A DomainError raised by a
// sub-expression is rethrown as PreconditionError naming that sub-expression.
Umbra evaluate(const UmbraExpr &e, std::size_t order);

class PreconditionError : public DomainError
{
public:
    using DomainError::DomainError;
};

} // namespace umbral

#endif
