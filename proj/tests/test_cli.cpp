#include "support.hpp"

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "umbral/errors.hpp"
#include "umbral/expression.hpp"
#include "umbral/random_umbra.hpp"

using umbral::Rational;
using umbral::UmbraExpr;
namespace u = umbral;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = u::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args)
{
    args.insert(args.end(), {"--format", "json"});
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::vector<std::vector<Rational>> rational_rows(const nlohmann::json &rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto &row : rows) {
        std::vector<Rational> r;
        for (const auto &cell : row) {
            r.push_back(Rational::parse(cell.get<std::string>()));
        }
        out.push_back(r);
    }
    return out;
}

UmbraExpr random_expr(u::UmbraGenerator &gen, int depth)
{
    static const char *leaves[] = {"eps", "chi", "bell", "ubar", "scalar", "egf", "moments"};
    static const char *unary[] = {"dotscalar", "deriv", "inv"};
    static const char *binary[] = {"add", "dot", "comp", "k"};
    UmbraExpr e;
    const long pick = depth == 0 ? 0 : gen.integer(0, 2);
    if (pick == 0) {
        e.head = leaves[gen.integer(0, 6)];
        if (e.head == "scalar") {
            e.numbers.push_back(gen.rational(9, 9));
        } else if (e.head == "egf" || e.head == "moments") {
            e.numbers.push_back(Rational(1));
            for (long i = gen.integer(0, 4); i > 0; --i) {
                e.numbers.push_back(gen.rational(9, 9));
            }
        }
    } else if (pick == 1) {
        e.head = unary[gen.integer(0, 2)];
        if (e.head == "dotscalar") {
            e.numbers.push_back(gen.rational(9, 9));
        }
        e.args.push_back(random_expr(gen, depth - 1));
    } else {
        e.head = binary[gen.integer(0, 3)];
        e.args.push_back(random_expr(gen, depth - 1));
        e.args.push_back(random_expr(gen, depth - 1));
    }
    return e;
}

} // namespace

TEST_CASE("expression parsing")
{
    const auto e = u::parse_umbra(" add( bell , dotscalar(-1/2, chi) ) ");
    CHECK(e.head == "add");
    CHECK(e.args.size() == 2);
    CHECK(e.args[1].numbers == std::vector<Rational>{Rational(-1, 2)});
    CHECK(u::print(e) == "add(bell,dotscalar(-1/2,chi))");
    CHECK(u::evaluate(u::parse_umbra("bell"), 5) == support::moments({1, 1, 2, 5, 15, 52}));
    CHECK(u::evaluate(u::parse_umbra("egf(1,1,1/2)"), 3) == support::moments({1, 1, 1, 0}));
    CHECK(u::evaluate(u::parse_umbra("moments(1,1,1/2)"), 3) == support::moments({1, 1, Rational(1, 2), 0}));
    CHECK(u::evaluate(u::parse_umbra("comp(scalar(1),ubar)"), 3) == support::moments({1, 1, 3, 13}));
}

TEST_CASE("parse errors carry positions")
{
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"", 0}, {"foo", 0}, {"add(bell)", 8}, {"add(bell,,chi)", 9}, {"scalar(x)", 7},
        {"bell chi", 5}, {"scalar(1/0)", 9}, {"dot(chi,bell", 12},
    };
    for (const auto &[text, pos] : cases) {
        CAPTURE(text);
        try {
            (void)u::parse_umbra(text);
            FAIL("no parse error");
        } catch (const u::ParseError &err) {
            CHECK(err.position() == pos);
        }
    }
}

TEST_CASE("precondition errors name the sub-expression")
{
    try {
        (void)u::evaluate(u::parse_umbra("add(bell, inv(eps))"), 4);
        FAIL("no error");
    } catch (const u::PreconditionError &err) {
        CHECK(std::string(err.what()).find("'inv(eps)' at position 10") != std::string::npos);
    }
    CHECK_THROWS_AS(u::evaluate(u::parse_umbra("egf(2,1)"), 3), u::PreconditionError);
}

TEST_CASE("property: parse(print(e)) == e")
{
    u::UmbraGenerator gen(41);
    for (int i = 0; i < 300; ++i) {
        const auto e = random_expr(gen, 4);
        const auto text = u::print(e);
        CAPTURE(text);
        CHECK(u::parse_umbra(text) == e);
        CHECK(u::print(u::parse_umbra(text)) == text);
    }
}

TEST_CASE("umbra command")
{
    const auto j = run_json({"umbra", "bell", "--order", "5"});
    CHECK(j["moments"] == nlohmann::json({"1", "1", "2", "5", "15", "52"}));
    CHECK(run_json({"umbra", "eps", "--order", "3"})["moments"] == nlohmann::json({"1", "0", "0", "0"}));
    CHECK(run_json({"umbra", "dot(chi,bell)", "--order", "4"})["moments"] ==
          nlohmann::json({"1", "1", "1", "1", "1"}));
    const auto csv = run({"--order", "2", "umbra", "ubar", "--format", "csv"});
    CHECK(csv.out == "n,moment,gf\n0,1,1\n1,1,1\n2,2,1\n");
}

TEST_CASE("riordan command")
{
    const auto show = run_json({"riordan", "show", "scalar(1)", "eps", "--order", "4"});
    CHECK(show["order"] == 4);
    CHECK(show["flavor"] == "exponential");
    const auto rows = rational_rows(show["entries"]);
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t k = 0; k <= 4; ++k) {
            CHECK(rows[n][k] == (k <= n ? u::binomial(Rational(n), static_cast<unsigned>(k)) : Rational(0)));
        }
    }
    const auto inv = run_json({"riordan", "inverse", "scalar(1)", "eps", "--order", "4"});
    CHECK(inv["product_is_identity"] == true);
    CHECK(rational_rows(inv["entries"])[3][1] == Rational(3));
    CHECK(rational_rows(inv["entries"])[3][2] == Rational(-3));
    const auto applied = run_json({"riordan", "apply", "scalar(1)", "eps", "scalar(1)", "--order", "4"});
    CHECK(applied["sequence"] == nlohmann::json({"1", "2", "4", "8", "16"}));
    const auto sq = run_json({"riordan", "multiply", "scalar(1)", "eps", "scalar(1)", "eps", "--order", "3"});
    CHECK(rational_rows(sq["entries"])[3][0] == Rational(8));
    const auto ord = run_json({"riordan", "show", "scalar(1)", "eps", "--order", "3", "--flavor", "ordinary"});
    CHECK(rational_rows(ord["entries"])[3][0] == Rational(1, 6));
    CHECK(run({"riordan", "show", "bell", "--order", "3"}).code == u::cli::exit_usage);
}

TEST_CASE("family command")
{
    const auto cheb = run({"family", "chebyshev-u", "--nmax", "3", "--format", "csv"});
    CHECK(cheb.code == 0);
    CHECK(cheb.out == "monomial,0,1\nmonomial,1,0,2\nmonomial,2,-1,0,4\nmonomial,3,0,-4,0,8\n");
    const auto pid = run_json({"family", "pidduck", "--nmax", "1"});
    CHECK(pid["polynomials"] == nlohmann::json({{"1"}, {"1", "2"}}));
    CHECK(pid["binomial_basis"] == nlohmann::json({{"1"}, {"1", "2"}}));
    const auto geg = run_json({"family", "gegenbauer", "--lambda", "1", "--nmax", "2"});
    const auto cheb2 = run_json({"family", "chebyshev-u", "--nmax", "2"});
    CHECK(geg["polynomials"] == cheb2["polynomials"]);
    CHECK(run({"family", "meixner", "--b", "1", "--c", "1"}).code == u::cli::exit_precondition);
    CHECK(run({"family", "meixner", "--b", "1"}).code == u::cli::exit_usage);
    CHECK(run({"family", "gegenbauer", "--lambda", "1/0"}).code == u::cli::exit_parse_error);
}

TEST_CASE("sheffer command")
{
    const auto s = run_json({"sheffer", "ubar", "eps", "--order", "2"});
    CHECK(s["polynomials"][2] == nlohmann::json({"2", "2", "1"}));
    CHECK(run_json({"sheffer", "bell", "chi", "--order", "5", "--abel"}) ==
          run_json({"sheffer", "bell", "chi", "--order", "5"}));
}

TEST_CASE("verify command")
{
    CHECK(run({"verify", "duality"}).code == 0);
    const auto abel = run_json({"verify", "abel", "--order", "10", "--seed", "42"});
    CHECK(abel["passed"] == true);
    CHECK(abel["seed"] == 42);
    CHECK(run({"verify", "families", "--order", "10"}).code == 0);
    CHECK(run({"verify", "duality", "--order", "21"}).code == u::cli::exit_precondition);
    CHECK(run({"verify", "nonsense"}).code == u::cli::exit_usage);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == u::cli::exit_usage);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"umbra", "add(bell"}).code == u::cli::exit_parse_error);
    const auto pre = run({"umbra", "inv(eps)"});
    CHECK(pre.code == u::cli::exit_precondition);
    CHECK(pre.err.find("inv(eps)") != std::string::npos);
    CHECK(run({"umbra", "bell", "--format", "xml"}).code == u::cli::exit_usage);
}

TEST_CASE("determinism")
{
    const std::vector<std::string> cmd{"verify", "sheffer", "--order", "8", "--seed", "5", "--format", "json"};
    CHECK(run(cmd).out == run(cmd).out);
    const auto other = run({"verify", "sheffer", "--order", "8", "--seed", "6", "--format", "json"});
    CHECK(other.code == 0);
}
