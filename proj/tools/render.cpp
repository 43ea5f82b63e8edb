#include "render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace umbral::cli
{

namespace
{

using json = nlohmann::ordered_json;

using Table = std::vector<std::vector<std::string>>;

// Right-aligned columns separated by two spaces.
std::string aligned(const Table &rows)
{
    std::vector<std::size_t> width;
    for (const auto &row : rows) {
        width.resize(std::max(width.size(), row.size()));
        for (std::size_t j = 0; j < row.size(); ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += (j ? "  " : "") + std::string(width[j] - row[j].size(), ' ') + row[j];
        }
        out += line + "\n";
    }
    return out;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string> &fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? "," : "") + csv_field(fields[i]);
    }
    return out + "\n";
}

std::vector<std::string> strings(const std::vector<Rational> &v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto &r : v) {
        out.push_back(r.str());
    }
    return out;
}

std::vector<std::string> strings(const Poly &p)
{
    if (p.degree() < 0) {
        return {"0"};
    }
    return strings(p.coefficients());
}

std::vector<std::vector<std::string>> rows_of(const Matrix &m)
{
    std::vector<std::vector<std::string>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            rows[i].push_back(m(i, j).str());
        }
    }
    return rows;
}

std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

std::vector<Rational> gf_coefficients(const Umbra &u)
{
    std::vector<Rational> c;
    for (std::size_t n = 0; n <= u.order(); ++n) {
        c.push_back(u.moment(n) / factorial(static_cast<unsigned>(n)));
    }
    return c;
}

json family_params_json(const FamilyKind &kind)
{
    json p = json::object();
    if (const auto *g = std::get_if<family::Gegenbauer>(&kind)) {
        p["lambda"] = g->lambda.str();
    } else if (const auto *m = std::get_if<family::Meixner>(&kind)) {
        p["b"] = m->b.str();
        p["c"] = m->c.str();
    }
    return p;
}

bool has_binomial_basis(const FamilyKind &kind)
{
    return std::holds_alternative<family::Meixner>(kind) || std::holds_alternative<family::MittagLeffler>(kind) ||
           std::holds_alternative<family::Pidduck>(kind);
}

} // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "pretty") {
        return Format::pretty;
    }
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    return std::nullopt;
}

std::string render_umbra(const std::string &expression, const Umbra &u, Format fmt)
{
    const auto moments = strings(std::vector<Rational>(u.moments().begin(), u.moments().end()));
    const auto coeffs = strings(gf_coefficients(u));
    switch (fmt) {
    case Format::json: {
        json j;
        j["expression"] = expression;
        j["order"] = u.order();
        j["moments"] = moments;
        j["gf"] = coeffs;
        return dump(j);
    }
    case Format::csv: {
        std::string out = csv_row({"n", "moment", "gf"});
        for (std::size_t n = 0; n < moments.size(); ++n) {
            out += csv_row({std::to_string(n), moments[n], coeffs[n]});
        }
        return out;
    }
    case Format::pretty:
        break;
    }
    Table t{{"n", "m_n", "c_n"}};
    for (std::size_t n = 0; n < moments.size(); ++n) {
        t.push_back({std::to_string(n), moments[n], coeffs[n]});
    }
    return "umbra " + expression + " at order " + std::to_string(u.order()) + "\n" + aligned(t);
}

std::string render_matrix(const RiordanArray &a, Format fmt, const std::optional<MatrixNote> &note)
{
    const auto rows = rows_of(a.entries());
    switch (fmt) {
    case Format::json: {
        json j;
        j["order"] = a.order();
        j["flavor"] = to_string(a.flavor());
        j["entries"] = rows;
        if (note) {
            j[note->key] = note->value;
        }
        return dump(j);
    }
    case Format::csv: {
        std::string out;
        for (const auto &row : rows) {
            out += csv_row(row);
        }
        return out;
    }
    case Format::pretty:
        break;
    }
    Table t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.emplace_back(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
    std::string out = std::string(to_string(a.flavor())) + " Riordan array, order " + std::to_string(a.order()) + "\n" +
                      aligned(t);
    if (note) {
        out += note->text + ": " + (note->value ? "yes" : "no") + "\n";
    }
    return out;
}

std::string render_sequence(std::size_t order, Flavor flavor, const std::vector<Rational> &seq, Format fmt)
{
    const auto values = strings(seq);
    switch (fmt) {
    case Format::json: {
        json j;
        j["order"] = order;
        j["flavor"] = to_string(flavor);
        j["sequence"] = values;
        return dump(j);
    }
    case Format::csv:
        return csv_row(values);
    case Format::pretty:
        break;
    }
    Table t{{"n", "value"}};
    for (std::size_t n = 0; n < values.size(); ++n) {
        t.push_back({std::to_string(n), values[n]});
    }
    return aligned(t);
}

std::string render_polynomials(std::size_t order, const std::vector<Poly> &polys, Format fmt)
{
    switch (fmt) {
    case Format::json: {
        json j;
        j["order"] = order;
        json list = json::array();
        for (const auto &p : polys) {
            list.push_back(strings(p));
        }
        j["polynomials"] = list;
        return dump(j);
    }
    case Format::csv: {
        std::string out;
        for (const auto &p : polys) {
            out += csv_row(strings(p));
        }
        return out;
    }
    case Format::pretty:
        break;
    }
    std::string out;
    for (std::size_t n = 0; n < polys.size(); ++n) {
        out += "s_" + std::to_string(n) + " = " + to_string(polys[n]) + "\n";
    }
    return out;
}

std::string render_family(const FamilyKind &kind, unsigned nmax, Format fmt)
{
    validate(kind);
    std::vector<Poly> polys;
    std::vector<std::vector<Rational>> basis;
    for (unsigned n = 0; n <= nmax; ++n) {
        polys.push_back(family_polynomial(kind, n));
        if (has_binomial_basis(kind)) {
            basis.push_back(binomial_basis_coefficients(kind, n));
        }
    }
    const std::string name = family_name(kind);
    switch (fmt) {
    case Format::json: {
        json j;
        j["family"] = name;
        j["params"] = family_params_json(kind);
        j["nmax"] = nmax;
        json list = json::array();
        for (const auto &p : polys) {
            list.push_back(strings(p));
        }
        j["polynomials"] = list;
        if (!basis.empty()) {
            json b = json::array();
            for (const auto &row : basis) {
                b.push_back(strings(row));
            }
            j["binomial_basis"] = b;
        }
        return dump(j);
    }
    case Format::csv: {
        std::string out;
        for (unsigned n = 0; n <= nmax; ++n) {
            auto row = strings(polys[n]);
            row.insert(row.begin(), {"monomial", std::to_string(n)});
            out += csv_row(row);
        }
        for (unsigned n = 0; n < basis.size(); ++n) {
            auto row = strings(basis[n]);
            row.insert(row.begin(), {"binomial", std::to_string(n)});
            out += csv_row(row);
        }
        return out;
    }
    case Format::pretty:
        break;
    }
    std::string header = name;
    const json params = family_params_json(kind);
    for (const auto &[key, value] : params.items()) {
        header += " " + key + "=" + value.get<std::string>();
    }
    std::string out = header + "\n";
    for (unsigned n = 0; n <= nmax; ++n) {
        out += "P_" + std::to_string(n) + " = " + to_string(polys[n]) + "\n";
    }
    if (!basis.empty()) {
        out += "in the basis C(x,k), k = 0..n:\n";
        Table t;
        for (unsigned n = 0; n < basis.size(); ++n) {
            auto row = strings(basis[n]);
            row.insert(row.begin(), "P_" + std::to_string(n));
            t.push_back(row);
        }
        out += aligned(t);
    }
    return out;
}

std::string render_report(Suite suite, std::size_t order, std::uint64_t seed, const std::vector<CheckResult> &results,
                          Format fmt)
{
    const bool all_passed =
        std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
    switch (fmt) {
    case Format::json: {
        json j;
        j["suite"] = to_string(suite);
        j["order"] = order;
        j["seed"] = seed;
        json list = json::array();
        for (const auto &r : results) {
            json item;
            item["identity"] = r.identity;
            item["statement"] = r.statement;
            item["cases"] = r.cases;
            item["passed"] = r.passed;
            if (!r.passed) {
                item["counterexample"] = r.counterexample;
            }
            list.push_back(item);
        }
        j["results"] = list;
        j["passed"] = all_passed;
        return dump(j);
    }
    case Format::csv: {
        std::string out = csv_row({"identity", "statement", "cases", "passed", "counterexample"});
        for (const auto &r : results) {
            out += csv_row({r.identity, r.statement, std::to_string(r.cases), r.passed ? "true" : "false",
                            r.counterexample});
        }
        return out;
    }
    case Format::pretty:
        break;
    }
    std::ostringstream os;
    os << "suite " << to_string(suite) << ", order " << order << ", seed " << seed << "\n";
    for (const auto &r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.identity << " (" << r.cases << " cases)\n"
           << "      " << r.statement << "\n";
        if (!r.passed) {
            os << "      counterexample: " << r.counterexample << "\n";
        }
    }
    os << (all_passed ? "all identities hold" : "verification failed") << "\n";
    return os.str();
}

} // namespace umbral::cli
