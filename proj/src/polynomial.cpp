#include "umbral/polynomial.hpp"

#include <sstream>

namespace umbral
{

BiPoly in_x(const Poly &p)
{
    return BiPoly(p);
}

BiPoly in_y(const Poly &p)
{
    std::vector<Poly> out;
    out.reserve(p.coefficients().size());
    for (const auto &c : p.coefficients()) {
        out.emplace_back(c);
    }
    return BiPoly(std::move(out));
}

BiPoly at_x_plus_y(const Poly &p)
{
    const BiPoly sum = in_x(Poly::variable()) + BiPoly::variable();
    return p.evaluate(sum);
}

Poly drop_y(const BiPoly &p)
{
    if (p.degree() > 0) {
        throw DomainError("bivariate polynomial still depends on y");
    }
    return p[0];
}

namespace
{

void append_term(std::ostringstream &os, bool &first, const Rational &c, const std::string &mono)
{
    if (c.is_zero()) {
        return;
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
        if (c.sign() < 0) {
            os << '-';
        }
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
        os << mag;
    } else if (mag.is_one()) {
        os << mono;
    } else if (mag.is_integer()) {
        os << mag << mono;
    } else {
        os << '(' << mag << ')' << mono;
    }
}

std::string power(const std::string &var, std::size_t e)
{
    if (e == 0) {
        return {};
    }
    return e == 1 ? var : var + "^" + std::to_string(e);
}

} // namespace

std::string to_string(const Poly &p, const std::string &var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        append_term(os, first, p[i], power(var, i));
    }
    return os.str();
}

std::string to_string(const BiPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = p.coefficients().size(); j-- > 0;) {
        const Poly &cy = p.coefficients()[j];
        for (std::size_t i = cy.coefficients().size(); i-- > 0;) {
            std::string mono = power("x", i);
            const std::string ypart = power("y", j);
            if (!mono.empty() && !ypart.empty()) {
                mono += "*";
            }
            append_term(os, first, cy[i], mono + ypart);
        }
    }
    return os.str();
}

} // namespace umbral
