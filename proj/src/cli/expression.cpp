#include "cornerjet/cli/expression.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cornerjet::cli {

namespace {

enum class Mode
{
    halfline,
    quadrant,
    plot
};

using Exponents = std::pair<int, int>;         // (x or t, y)
using Basis = std::pair<int, int>;             // (dx, dy)
using Poly = std::map<Exponents, Rational>;

/// A sum of coefficient * monomial * basis terms. A basis stays present after its terms cancel, so
/// `0*dx^2` still has degree 2.
struct Value
{
    std::map<Basis, Poly> parts;

    static Value scalar(const Rational& c)
    {
        Value v;
        Poly& p = v.parts[{0, 0}];
        if (c != 0) {
            p[{0, 0}] = c;
        }
        return v;
    }

    static Value monomial(Exponents e, Basis b)
    {
        Value v;
        v.parts[b][e] = 1;
        return v;
    }

    /// The single term of a monomial value, if it is one.
    std::optional<std::pair<Basis, std::pair<Exponents, Rational>>> as_monomial() const
    {
        if (parts.size() != 1 || parts.begin()->second.size() != 1) {
            return std::nullopt;
        }
        const auto& [b, p] = *parts.begin();
        return std::pair{b, *p.begin()};
    }
};

void add_into(Poly& p, Exponents e, const Rational& c)
{
    Rational& slot = p[e];
    slot += c;
    if (slot == 0) {
        p.erase(e);
    }
}

Value add(const Value& a, const Value& b, int sign)
{
    Value r = a;
    for (const auto& [basis, poly] : b.parts) {
        Poly& target = r.parts[basis];
        for (const auto& [e, c] : poly) {
            add_into(target, e, sign > 0 ? c : Rational(-c));
        }
    }
    return r;
}

Value multiply(const Value& a, const Value& b)
{
    Value r;
    for (const auto& [ba, pa] : a.parts) {
        for (const auto& [bb, pb] : b.parts) {
            Poly& target = r.parts[{ba.first + bb.first, ba.second + bb.second}];
            for (const auto& [ea, ca] : pa) {
                for (const auto& [eb, cb] : pb) {
                    add_into(target, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
                }
            }
        }
    }
    return r;
}

struct Token
{
    enum class Kind
    {
        number,
        ident,
        symbol,
        end
    };

    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    const auto advance = [&] {
        if (s[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance();
            continue;
        }
        const int l = line;
        const int c = column;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                digits += s[i];
                advance();
            }
            if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E')) {
                throw ParseError(l, c, "floating-point literals are not allowed; write a fraction such as 1/2");
            }
            out.push_back({Token::Kind::number, digits, l, c});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string word;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                word += s[i];
                advance();
            }
            out.push_back({Token::Kind::ident, word, l, c});
        } else if (std::string_view("+-*/^(){};,").find(ch) != std::string_view::npos) {
            out.push_back({Token::Kind::symbol, std::string(1, ch), l, c});
            advance();
        } else {
            throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({Token::Kind::end, "", line, column});
    return out;
}

constexpr int kMaxPower = 64;

class Parser
{
  public:
    Parser(std::string_view text, Mode mode) : tokens_(tokenize(text)), mode_(mode) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    bool accept(std::string_view symbol)
    {
        if (peek().kind == Token::Kind::symbol && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view word)
    {
        if (peek().kind == Token::Kind::ident && peek().text == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(std::string_view symbol)
    {
        if (!accept(symbol)) {
            fail(peek(), "expected '" + std::string(symbol) + "', found " + describe(peek()));
        }
    }

    void expect_end()
    {
        if (!at_end()) {
            fail(peek(), "unexpected " + describe(peek()));
        }
    }

    [[noreturn]] static void fail(const Token& t, const std::string& message) { throw ParseError(t.line, t.column, message); }

    /// Top-level sum; each top-level term is checked against the exponent minimum.
    Value sum(std::optional<int> min_exponent = std::nullopt)
    {
        const Token first = peek();
        Value v = term();
        check_minimum(v, first, min_exponent);
        while (true) {
            int sign = 0;
            if (accept("+")) {
                sign = 1;
            } else if (accept("-")) {
                sign = -1;
            } else {
                break;
            }
            const Token start = peek();
            const Value rhs = term();
            check_minimum(rhs, start, min_exponent);
            v = add(v, rhs, sign);
        }
        return v;
    }

    PlotGerm plot();

  private:
    Value term()
    {
        Value v = unary();
        while (true) {
            if (accept("*")) {
                v = multiply(v, unary());
            } else if (peek().kind == Token::Kind::symbol && peek().text == "/") {
                const Token op = peek();
                ++pos_;
                v = multiply(v, reciprocal(unary(), op));
            } else {
                break;
            }
        }
        return v;
    }

    Value unary()
    {
        if (accept("-")) {
            return multiply(Value::scalar(-1), unary());
        }
        return power();
    }

    Value power()
    {
        Value base = primary();
        if (peek().kind == Token::Kind::symbol && peek().text == "^") {
            const Token op = peek();
            ++pos_;
            const int e = exponent();
            if (e < 0) {
                return int_power(reciprocal(base, op), -e);
            }
            return int_power(base, e);
        }
        return base;
    }

    int exponent()
    {
        std::string close;
        if (accept("{")) {
            close = "}";
        } else if (accept("(")) {
            close = ")";
        }
        const bool negative = accept("-");
        const Token t = peek();
        if (t.kind != Token::Kind::number) {
            fail(t, "expected an integer exponent, found " + describe(t));
        }
        ++pos_;
        if (t.text.size() > 3 || std::stoi(t.text) > kMaxPower) {
            fail(t, "exponent larger than " + std::to_string(kMaxPower));
        }
        if (!close.empty()) {
            expect(close);
        }
        const int e = std::stoi(t.text);
        return negative ? -e : e;
    }

    Value primary()
    {
        const Token t = peek();
        switch (t.kind) {
            case Token::Kind::number:
                ++pos_;
                return Value::scalar(Rational(mpz_class(t.text)));
            case Token::Kind::ident:
                ++pos_;
                return symbol(t);
            case Token::Kind::symbol:
                if (accept("(")) {
                    Value v = sum();
                    expect(")");
                    return v;
                }
                fail(t, "unexpected " + describe(t));
            case Token::Kind::end:
                break;
        }
        fail(t, "unexpected end of input");
    }

    Value symbol(const Token& t)
    {
        const std::string& s = t.text;
        switch (mode_) {
            case Mode::plot:
                if (s == "t") {
                    return Value::monomial({1, 0}, {0, 0});
                }
                if (s == "x" || s == "y" || s == "dx" || s == "dy") {
                    fail(t, "symbol '" + s + "' is not allowed in a plot; plots are polynomials in t");
                }
                break;
            case Mode::halfline:
                if (s == "x") {
                    return Value::monomial({1, 0}, {0, 0});
                }
                if (s == "dx") {
                    return Value::monomial({0, 0}, {1, 0});
                }
                if (s == "y" || s == "dy") {
                    fail(t, "symbol '" + s + "' belongs to quadrant expressions; use --space quadrant");
                }
                break;
            case Mode::quadrant:
                if (s == "x") {
                    return Value::monomial({1, 0}, {0, 0});
                }
                if (s == "y") {
                    return Value::monomial({0, 1}, {0, 0});
                }
                if (s == "dx") {
                    return Value::monomial({0, 0}, {1, 0});
                }
                if (s == "dy") {
                    return Value::monomial({0, 0}, {0, 1});
                }
                break;
        }
        if (s == "t") {
            fail(t, "symbol 't' is only valid in plots");
        }
        fail(t, "unknown symbol '" + s + "'");
    }

    static Value reciprocal(const Value& v, const Token& op)
    {
        const auto m = v.as_monomial();
        if (!m || m->first != Basis{0, 0}) {
            fail(op, "division only by a nonzero monomial in the coordinates");
        }
        const auto& [e, c] = m->second;
        Value r;
        r.parts[{0, 0}][{-e.first, -e.second}] = 1 / c;
        return r;
    }

    static Value int_power(const Value& v, int e)
    {
        Value r = Value::scalar(1);
        for (int i = 0; i < e; ++i) {
            r = multiply(r, v);
        }
        return r;
    }

    void check_minimum(const Value& v, const Token& at, std::optional<int> min_exponent) const
    {
        if (!min_exponent) {
            return;
        }
        for (const auto& [basis, poly] : v.parts) {
            for (const auto& [e, c] : poly) {
                if (e.first < *min_exponent) {
                    fail(at, "exponent " + std::to_string(e.first) + " of " + (mode_ == Mode::plot ? "t" : "x") +
                                 " below minimum " + std::to_string(*min_exponent));
                }
                if (e.second < *min_exponent) {
                    fail(at, "exponent " + std::to_string(e.second) + " of y below minimum " +
                                 std::to_string(*min_exponent));
                }
            }
        }
    }

    static std::string describe(const Token& t)
    {
        return t.kind == Token::Kind::end ? std::string("end of input") : "'" + t.text + "'";
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Mode mode_;
};

std::vector<Rational> polynomial_of(const Value& v, const Token& at)
{
    std::vector<Rational> coeffs;
    for (const auto& [basis, poly] : v.parts) {
        if (basis != Basis{0, 0}) {
            Parser::fail(at, "expected a polynomial");
        }
        for (const auto& [e, c] : poly) {
            if (e.first < 0) {
                Parser::fail(at, "expected a polynomial in t, found t^" + std::to_string(e.first));
            }
            if (coeffs.size() <= static_cast<std::size_t>(e.first)) {
                coeffs.resize(static_cast<std::size_t>(e.first) + 1, Rational(0));
            }
            coeffs[static_cast<std::size_t>(e.first)] = c;
        }
    }
    return coeffs;
}

PlotGerm Parser::plot()
{
    const Token start = peek();
    if (accept_word("flat")) {
        return PlotGerm::flat();
    }
    if (accept_word("interior")) {
        expect("(");
        const Token base_at = peek();
        const std::vector<Rational> base = polynomial_of(sum(), base_at);
        if (base.size() > 1) {
            fail(base_at, "interior base point must be a constant");
        }
        const Rational x0 = base.empty() ? Rational(0) : base[0];
        expect(";");
        const Token jet_at = peek();
        std::vector<Rational> jet = polynomial_of(sum(), jet_at);
        expect(")");
        if (jet.empty() || jet[0] != x0) {
            fail(jet_at, "interior jet must start at the base point " + to_string(x0));
        }
        if (x0 <= 0) {
            fail(base_at, "interior base point must be positive");
        }
        return make_interior_plot(x0, Jet1(std::move(jet)));
    }

    std::vector<Rational> p = polynomial_of(sum(), start);
    if (p.empty()) {
        fail(start, "the zero plot is not supported");
    }
    if (p[0] > 0) {
        const Rational x0 = p[0];
        return make_interior_plot(x0, Jet1(std::move(p)));
    }
    std::size_t v = 0;
    while (p[v] == 0) {
        ++v;
    }
    if (v % 2 != 0 || p[v] < 0) {
        fail(start, "plot not certified nonnegative");
    }
    return make_boundary_plot(static_cast<int>(v / 2), Jet1(std::vector<Rational>(p.begin() + static_cast<long>(v), p.end())));
}

LaurentJet laurent_of(const Poly& poly, int order, const Token& at)
{
    if (poly.empty()) {
        return LaurentJet{};
    }
    const int v = poly.begin()->first.first;
    const int top = poly.rbegin()->first.first;
    if (top > order) {
        Parser::fail(at, "term x^" + std::to_string(top) + " above working order " + std::to_string(order));
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order - v + 1), Rational(0));
    for (const auto& [e, c] : poly) {
        coeffs[static_cast<std::size_t>(e.first - v)] = c;
    }
    return LaurentJet(v, std::move(coeffs));
}

LaurentJet2 laurent2_of(const Poly& poly, int order, const Token& at)
{
    LaurentJet2::Terms terms;
    for (const auto& [e, c] : poly) {
        if (e.first + e.second > order) {
            Parser::fail(at, "term of total degree " + std::to_string(e.first + e.second) + " above working order " +
                                 std::to_string(order));
        }
        terms[e] = c;
    }
    return LaurentJet2(std::move(terms), order);
}

std::string basis_name(Basis b)
{
    std::string s;
    const auto one = [&](const char* sym, int e) {
        if (e == 0) {
            return;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += sym;
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    };
    one("dx", b.first);
    one("dy", b.second);
    return s.empty() ? "1" : s;
}

} // namespace

HalfLineTensor parse_halfline(std::string_view text, int order, int min_exponent)
{
    Parser parser(text, Mode::halfline);
    const Token start = parser.peek();
    const Value v = parser.sum(min_exponent);
    parser.expect_end();

    if (v.parts.size() > 1) {
        Parser::fail(start, "mixed tensor degrees: " + basis_name(v.parts.begin()->first) + " and " +
                                basis_name(std::next(v.parts.begin())->first));
    }
    const auto& [basis, poly] = *v.parts.begin();
    return make_halfline_tensor(basis.first, laurent_of(poly, order, start));
}

QuadrantTensor parse_quadrant(std::string_view text, int order, int min_exponent)
{
    Parser parser(text, Mode::quadrant);
    const Token start = parser.peek();
    const Value v = parser.sum(min_exponent);
    parser.expect_end();

    LaurentJet2 a(order), b(order), c(order);
    for (const auto& [basis, poly] : v.parts) {
        if (basis == Basis{2, 0}) {
            a = laurent2_of(poly, order, start);
        } else if (basis == Basis{0, 2}) {
            b = laurent2_of(poly, order, start);
        } else if (basis == Basis{1, 1}) {
            c = laurent2_of(poly, order, start);
        } else if (!poly.empty() || v.parts.size() == 1) {
            Parser::fail(start, "quadrant tensors use dx^2, dy^2 and dx*dy; found " + basis_name(basis));
        }
    }
    try {
        return make_quadrant_tensor(std::move(a), std::move(b), std::move(c), min_exponent);
    } catch (const std::invalid_argument& e) {
        Parser::fail(start, e.what());
    }
}

Tensor parse_tensor(std::string_view text, Space space, int order, int min_exponent)
{
    if (space == Space::halfline) {
        return parse_halfline(text, order, min_exponent);
    }
    return parse_quadrant(text, order, min_exponent);
}

PlotGerm parse_plot(std::string_view text)
{
    Parser parser(text, Mode::plot);
    PlotGerm p = parser.plot();
    parser.expect_end();
    return p;
}

QuadrantPlotGerm parse_quadrant_plot(std::string_view text)
{
    Parser parser(text, Mode::plot);
    const Token start = parser.peek();
    if (parser.accept_word("sq")) {
        parser.expect_end();
        return QuadrantPlotGerm::sq();
    }
    parser.expect("(");
    PlotGerm px = parser.plot();
    parser.expect(",");
    PlotGerm py = parser.plot();
    parser.expect(")");
    parser.expect_end();
    return QuadrantPlotGerm::pair(std::move(px), std::move(py));
}

std::vector<std::vector<Rational>> parse_polynomials(std::string_view text)
{
    Parser parser(text, Mode::plot);
    std::vector<std::vector<Rational>> out;
    do {
        const Token start = parser.peek();
        out.push_back(polynomial_of(parser.sum(), start));
    } while (parser.accept(";"));
    parser.expect_end();
    return out;
}

Rational parse_rational_literal(std::string_view text)
{
    Parser parser(text, Mode::plot);
    const Token start = parser.peek();
    const std::vector<Rational> p = polynomial_of(parser.sum(), start);
    parser.expect_end();
    if (p.size() > 1) {
        Parser::fail(start, "expected a rational number");
    }
    return p.empty() ? Rational(0) : p[0];
}

} // namespace cornerjet::cli
