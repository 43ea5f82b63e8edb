#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>

namespace umbral
{

namespace
{

bool parse_integer(std::string_view s, mpz_class &out)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            return false;
        }
    }
    // mpz_class rejects a leading '+'.
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    if (!parse_integer(text.substr(0, slash), num)) {
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    }
    if (slash != std::string_view::npos) {
        const auto rest = text.substr(slash + 1);
        if (rest.empty() || rest[0] == '-' || rest[0] == '+' || !parse_integer(rest, den)) {
            throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
        }
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
        }
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        throw DomainError("rational " + str() + " is not a machine integer");
    }
    return value_.get_num().get_si();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        return Rational(1) / pow(base, -exponent);
    }
    Rational result(1), b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result *= b;
        }
        e >>= 1U;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational falling_factorial(const Rational &top, unsigned k)
{
    Rational result(1);
    for (unsigned i = 0; i < k; ++i) {
        result *= top - Rational(i);
    }
    return result;
}

Rational binomial(const Rational &top, unsigned k)
{
    return falling_factorial(top, k) / factorial(k);
}

} // namespace umbral
