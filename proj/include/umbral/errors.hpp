#ifndef UMBRAL_ERRORS_HPP
#define UMBRAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbral
{

// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold (zero constant term where a
// unit is needed, non-invertible series, invalid family parameters, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Two operands carry different truncation orders.
class OrderMismatch : public DomainError
{
public:
    OrderMismatch(std::size_t lhs, std::size_t rhs)
        : DomainError("truncation order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
    {
    }
};

class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const
    {
        return position_;
    }

private:
    std::size_t position_;
};

inline void check_same_order(std::size_t lhs, std::size_t rhs)
{
    if (lhs != rhs) {
        throw OrderMismatch(lhs, rhs);
    }
}

} // namespace umbral

#endif
