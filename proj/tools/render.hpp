#ifndef UMBRAL_TOOLS_RENDER_HPP
#define UMBRAL_TOOLS_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/families.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/sheffer_riordan.hpp"
#include "umbral/umbra.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli
{

enum class Format { pretty, json, csv };

std::optional<Format> parse_format(std::string_view name);

// Every renderer returns the full text including the trailing newline.

// m_0..m_N and the gf coefficients c_n = m_n / n!.
std::string render_umbra(const std::string &expression, const Umbra &u, Format fmt);

// Full square matrix; `note` is an extra line (pretty) or key (json) when set.
struct MatrixNote {
    std::string key;
    bool value;
    std::string text;
};
std::string render_matrix(const RiordanArray &a, Format fmt, const std::optional<MatrixNote> &note = std::nullopt);

std::string render_sequence(std::size_t order, Flavor flavor, const std::vector<Rational> &seq, Format fmt);

std::string render_polynomials(std::size_t order, const std::vector<Poly> &polys, Format fmt);

std::string render_family(const FamilyKind &kind, unsigned nmax, Format fmt);

std::string render_report(Suite suite, std::size_t order, std::uint64_t seed, const std::vector<CheckResult> &results,
                          Format fmt);

} // namespace umbral::cli

#endif
