#ifndef UMBRAL_VERIFY_HPP
#define UMBRAL_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/umbral_poly.hpp"

namespace umbral
{

// Outcome of one identity checked over a batch of seeded random instances.
struct CheckResult {
    std::string identity;       // short name
    std::string statement;      // the identity in formula form
    std::size_t cases = 0;      // instances checked
    bool passed = true;
    std::string counterexample; // first failing instance: inputs and both sides
};

enum class Suite { abel, lif, duality, sheffer, riordan_group, families, all };

std::optional<Suite> parse_suite(std::string_view name);
const char *to_string(Suite s);

inline constexpr std::size_t default_verify_order = 12;
inline constexpr std::size_t max_verify_order = 20;

// Runs every identity of the suite at truncation order `order` with random
// instances drawn from `seed`. Deterministic in (suite, order, seed).
std::vector<CheckResult> run_suite(Suite suite, std::size_t order, std::uint64_t seed);

// q(arg) for a polynomial q, built as an umbral polynomial by Horner's scheme.
UmbralPolynomial substitute(const Poly &q, const UmbralPolynomial &arg);

} // namespace umbral

#endif
