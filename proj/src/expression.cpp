#include "umbral/expression.hpp"

#include <cctype>
#include <map>

namespace umbral
{

namespace
{

// Argument shape of each function: 'r' a rational literal, 'e' an umbra
// expression, '*' one or more rationals.
const std::map<std::string, std::string, std::less<>> &signatures()
{
    static const std::map<std::string, std::string, std::less<>> table{
        {"eps", ""},      {"chi", ""},     {"bell", ""},      {"ubar", ""},      {"scalar", "r"},
        {"egf", "*"},     {"moments", "*"}, {"add", "ee"},   {"dot", "ee"},     {"dotscalar", "re"}, {"deriv", "e"},
        {"inv", "e"},     {"comp", "ee"},  {"k", "ee"},
    };
    return table;
}

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text)
    {
    }

    UmbraExpr parse()
    {
        UmbraExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
        }
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Rational rational()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
        }
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected a rational literal", start);
        }
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError &e) {
            throw ParseError("malformed rational literal '" + std::string(text_.substr(start, pos_ - start)) + "'",
                             start + e.position());
        }
    }

    UmbraExpr expr()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0)) {
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected an umbra expression", start);
        }
        UmbraExpr e;
        e.head = std::string(text_.substr(start, pos_ - start));
        e.position = start;
        const auto sig = signatures().find(e.head);
        if (sig == signatures().end()) {
            throw ParseError("unknown umbra '" + e.head + "'", start);
        }
        const std::string &shape = sig->second;
        if (shape.empty()) {
            return e;
        }
        expect('(');
        if (shape == "*") {
            e.numbers.push_back(rational());
            while (peek(',')) {
                ++pos_;
                e.numbers.push_back(rational());
            }
        } else {
            for (std::size_t i = 0; i < shape.size(); ++i) {
                if (i > 0) {
                    expect(',');
                }
                if (shape[i] == 'r') {
                    e.numbers.push_back(rational());
                } else {
                    e.args.push_back(expr());
                }
            }
        }
        expect(')');
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Umbra build(const UmbraExpr &e, std::size_t order)
{
    const std::string &h = e.head;
    if (h == "eps") {
        return augmentation(order);
    }
    if (h == "chi") {
        return singleton(order);
    }
    if (h == "bell") {
        return bell(order);
    }
    if (h == "ubar") {
        return ubar(order);
    }
    if (h == "scalar") {
        return scalar(e.numbers[0], order);
    }
    if (h == "egf" || h == "moments") {
        std::vector<Rational> m(e.numbers);
        m.resize(order + 1);
        if (h == "egf") {
            for (std::size_t n = 0; n <= order; ++n) {
                m[n] *= factorial(static_cast<unsigned>(n));
            }
        }
        return Umbra(std::move(m));
    }
    if (h == "dotscalar") {
        return dot_scalar(e.numbers[0], evaluate(e.args[0], order));
    }
    if (h == "deriv") {
        return derivative_umbra(evaluate(e.args[0], order));
    }
    if (h == "inv") {
        return inverse_umbra(evaluate(e.args[0], order));
    }
    const Umbra a = evaluate(e.args[0], order);
    const Umbra b = evaluate(e.args[1], order);
    if (h == "add") {
        return add(a, b);
    }
    if (h == "dot") {
        return dot(a, b);
    }
    if (h == "comp") {
        return composition_umbra(a, b);
    }
    return k_umbra(a, b);
}

} // namespace

UmbraExpr parse_umbra(std::string_view text)
{
    return Parser(text).parse();
}

std::string print(const UmbraExpr &e)
{
    const std::string &shape = signatures().at(e.head);
    if (shape.empty()) {
        return e.head;
    }
    std::string out = e.head + "(";
    std::size_t ni = 0, ai = 0;
    if (shape == "*") {
        for (std::size_t i = 0; i < e.numbers.size(); ++i) {
            out += (i ? "," : "") + e.numbers[i].str();
        }
    } else {
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += shape[i] == 'r' ? e.numbers[ni++].str() : print(e.args[ai++]);
        }
    }
    return out + ")";
}

Umbra evaluate(const UmbraExpr &e, std::size_t order)
{
    try {
        return build(e, order);
    } catch (const PreconditionError &) {
        throw;
    } catch (const DomainError &err) {
        throw PreconditionError(std::string(err.what()) + " in '" + print(e) + "' at position " +
                                std::to_string(e.position));
    }
}

} // namespace umbral
