#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "render.hpp"
#include "umbral/errors.hpp"
#include "umbral/expression.hpp"
#include "umbral/families.hpp"
#include "umbral/sheffer_riordan.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli
{

namespace
{

// A ParseError tagged with the argument it came from, for the caret display.
struct ArgumentParseError {
    std::string argument;
    ParseError error;
};

Umbra umbra_arg(const std::string &text, std::size_t order)
{
    try {
        return evaluate(parse_umbra(text), order);
    } catch (const ParseError &e) {
        throw ArgumentParseError{text, e};
    }
}

Rational rational_arg(const std::string &text)
{
    try {
        return Rational::parse(text);
    } catch (const ParseError &e) {
        throw ArgumentParseError{text, e};
    }
}

struct Globals {
    std::size_t order = default_verify_order;
    std::string format = "pretty";
    std::uint64_t seed = 1;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact umbral calculus: umbrae, Sheffer sequences, Riordan arrays, polynomial families", "umbral"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--order", g.order, "truncation order N")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for the verification suites")->capture_default_str();

    auto *umbra_cmd = app.add_subcommand("umbra", "moments and gf coefficients of an umbra expression");
    std::string umbra_text;
    umbra_cmd->add_option("expression", umbra_text, "umbra expression")->required();

    auto *riordan_cmd = app.add_subcommand("riordan", "Riordan array of the pair (gamma, alpha)");
    std::string action;
    std::vector<std::string> riordan_args;
    std::string flavor_name = "exponential";
    riordan_cmd->add_option("action", action, "show | inverse | multiply | apply")
        ->required()
        ->check(CLI::IsMember({"show", "inverse", "multiply", "apply"}));
    riordan_cmd->add_option("umbrae", riordan_args,
                            "gamma alpha; multiply takes a second pair, apply a sequence umbra")
        ->required();
    riordan_cmd->add_option("--flavor", flavor_name, "exponential | ordinary")
        ->check(CLI::IsMember({"exponential", "ordinary"}))
        ->capture_default_str();

    auto *sheffer_cmd = app.add_subcommand("sheffer", "Sheffer sequence of the pair (gamma, alpha)");
    std::string sheffer_gamma, sheffer_alpha;
    bool use_abel = false;
    sheffer_cmd->add_option("gamma", sheffer_gamma)->required();
    sheffer_cmd->add_option("alpha", sheffer_alpha)->required();
    sheffer_cmd->add_flag("--abel", use_abel, "compute through the Abel representation");

    auto *family_cmd = app.add_subcommand("family", "explicit polynomials of a classical family");
    std::string kind_name;
    std::optional<unsigned> nmax;
    std::string lambda_text, b_text, c_text;
    family_cmd->add_option("kind", kind_name)
        ->required()
        ->check(CLI::IsMember({"chebyshev-u", "gegenbauer", "meixner", "mittag-leffler", "pidduck"}));
    family_cmd->add_option("--nmax", nmax, "largest degree (defaults to --order)");
    family_cmd->add_option("--lambda", lambda_text, "Gegenbauer parameter");
    family_cmd->add_option("--b", b_text, "Meixner parameter b");
    family_cmd->add_option("--c", c_text, "Meixner parameter c");

    auto *verify_cmd = app.add_subcommand("verify", "check the identity suites on seeded random umbrae");
    std::string suite_name;
    verify_cmd->add_option("suite", suite_name)
        ->required()
        ->check(CLI::IsMember({"abel", "lif", "duality", "sheffer", "riordan-group", "families", "all"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const Format fmt = *parse_format(g.format);
    const Flavor flavor = flavor_name == "ordinary" ? Flavor::ordinary : Flavor::exponential;

    try {
        if (umbra_cmd->parsed()) {
            const Umbra u = umbra_arg(umbra_text, g.order);
            out << render_umbra(print(parse_umbra(umbra_text)), u, fmt);
            return exit_ok;
        }
        if (riordan_cmd->parsed()) {
            const std::size_t want = action == "multiply" ? 4 : action == "apply" ? 3 : 2;
            if (riordan_args.size() != want) {
                err << "riordan " << action << " expects " << want << " umbra expressions, got "
                    << riordan_args.size() << "\n";
                return exit_usage;
            }
            const UmbraPair pair(umbra_arg(riordan_args[0], g.order), umbra_arg(riordan_args[1], g.order));
            const RiordanArray a = riordan_array(pair, flavor);
            if (action == "show") {
                out << render_matrix(a, fmt);
            } else if (action == "inverse") {
                const RiordanArray inv = riordan_inverse(a);
                const Matrix id = Matrix::identity(a.order() + 1);
                const bool ok = inv.entries() * a.entries() == id && a.entries() * inv.entries() == id;
                out << render_matrix(inv, fmt, MatrixNote{"product_is_identity", ok, "inverse times array is identity"});
            } else if (action == "multiply") {
                const UmbraPair second(umbra_arg(riordan_args[2], g.order), umbra_arg(riordan_args[3], g.order));
                out << render_matrix(riordan_multiply(a, riordan_array(second, flavor)), fmt);
            } else {
                const Umbra seq = umbra_arg(riordan_args[2], g.order);
                std::vector<Rational> result;
                if (flavor == Flavor::exponential) {
                    const Umbra image = ftra_apply(a, seq);
                    result.assign(image.moments().begin(), image.moments().end());
                } else {
                    result = a.entries() * gf(seq).coefficients();
                }
                out << render_sequence(a.order(), flavor, result, fmt);
            }
            return exit_ok;
        }
        if (sheffer_cmd->parsed()) {
            const UmbraPair pair(umbra_arg(sheffer_gamma, g.order), umbra_arg(sheffer_alpha, g.order));
            const ShefferSequence s = use_abel ? abel_representation(pair) : sheffer_sequence(pair);
            out << render_polynomials(g.order, s.polys, fmt);
            return exit_ok;
        }
        if (family_cmd->parsed()) {
            FamilyKind kind = family::ChebyshevU{};
            if (kind_name == "gegenbauer") {
                if (lambda_text.empty()) {
                    err << "gegenbauer needs --lambda\n";
                    return exit_usage;
                }
                kind = family::Gegenbauer{rational_arg(lambda_text)};
            } else if (kind_name == "meixner") {
                if (b_text.empty() || c_text.empty()) {
                    err << "meixner needs --b and --c\n";
                    return exit_usage;
                }
                kind = family::Meixner{rational_arg(b_text), rational_arg(c_text)};
            } else if (kind_name == "mittag-leffler") {
                kind = family::MittagLeffler{};
            } else if (kind_name == "pidduck") {
                kind = family::Pidduck{};
            }
            out << render_family(kind, nmax.value_or(static_cast<unsigned>(g.order)), fmt);
            return exit_ok;
        }
        const Suite suite = *parse_suite(suite_name);
        const auto results = run_suite(suite, g.order, g.seed);
        out << render_report(suite, g.order, g.seed, results, fmt);
        const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
        return ok ? exit_ok : exit_verification_failed;
    } catch (const ArgumentParseError &e) {
        err << "parse error: " << e.error.what() << "\n  " << e.argument << "\n  "
            << std::string(std::min(e.error.position(), e.argument.size()), ' ') << "^\n";
        return exit_parse_error;
    } catch (const DomainError &e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    }
}

} // namespace umbral::cli
