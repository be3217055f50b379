#include "cornerjet/cli/printer.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace cornerjet::cli {

namespace {

struct Term
{
    Rational coeff;
    std::vector<std::string> factors;
};

std::string power(std::string_view var, int e)
{
    if (e == 0) {
        return "";
    }
    std::string s(var);
    if (e != 1) {
        s += "^" + std::to_string(e);
    }
    return s;
}

void push_power(std::vector<std::string>& factors, std::string_view var, int e)
{
    if (e != 0) {
        factors.push_back(power(var, e));
    }
}

std::string join(const std::vector<Term>& terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        const bool negative = t.coeff < 0;
        if (i == 0) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(t.coeff);
        std::string body;
        for (const auto& f : t.factors) {
            body += (body.empty() ? "" : "*") + f;
        }
        if (body.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += to_string(mag) + "*" + body;
        }
    }
    return out;
}

std::string basis_of_degree(int k)
{
    return power("dx", k);
}

std::string with_basis(std::vector<Term> terms, const std::string& basis)
{
    if (basis.empty()) {
        return join(terms);
    }
    if (terms.empty()) {
        return "0*" + basis;
    }
    for (Term& t : terms) {
        t.factors.push_back(basis);
    }
    return join(terms);
}

std::vector<Term> terms_of(const LaurentJet& j, std::string_view var)
{
    std::vector<Term> out;
    if (j.is_zero()) {
        return out;
    }
    for (int d = j.valuation(); d <= j.top_degree(); ++d) {
        if (j.coeff(d) != 0) {
            Term t{j.coeff(d), {}};
            push_power(t.factors, var, d);
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

std::string print(const HalfLineTensor& tau)
{
    return with_basis(terms_of(tau.coeff(), "x"), basis_of_degree(tau.degree()));
}

std::string print(const QuadrantTensor& tau)
{
    // basis rank: dx^2, dy^2, dx*dy
    std::map<std::tuple<int, int, int>, Rational> sorted;
    const LaurentJet2* parts[] = {&tau.a(), &tau.b(), &tau.c()};
    for (int r = 0; r < 3; ++r) {
        for (const auto& [e, c] : parts[r]->terms()) {
            sorted[{e.first, e.second, r}] = c;
        }
    }
    if (sorted.empty()) {
        return "0*dx^2";
    }
    static const char* basis[] = {"dx^2", "dy^2", "dx*dy"};
    std::vector<Term> terms;
    for (const auto& [key, c] : sorted) {
        Term t{c, {}};
        push_power(t.factors, "x", std::get<0>(key));
        push_power(t.factors, "y", std::get<1>(key));
        t.factors.emplace_back(basis[std::get<2>(key)]);
        terms.push_back(std::move(t));
    }
    return join(terms);
}

std::string print(const PlotGerm& p)
{
    if (p.is_flat()) {
        return "flat";
    }
    if (p.is_interior()) {
        // the positive constant term identifies an interior germ
        return print_polynomial(p.interior().jet, "t");
    }
    const BoundaryGerm& b = p.boundary();
    const std::string lead = power("t", 2 * b.m);
    const std::string unit = print_polynomial(b.unit, "t");
    if (unit == "1") {
        return lead;
    }
    const bool constant = unit.find('t') == std::string::npos;
    return lead + "*" + (constant ? unit : "(" + unit + ")");
}

std::string print(const QuadrantPlotGerm& p)
{
    if (p.is_sq()) {
        return "sq";
    }
    return "(" + print(p.components().px) + ", " + print(p.components().py) + ")";
}

std::string print_polynomial(const Jet1& j, std::string_view var)
{
    std::vector<Term> terms;
    for (int d = 0; d <= j.order(); ++d) {
        if (j[d] != 0) {
            Term t{j[d], {}};
            push_power(t.factors, var, d);
            terms.push_back(std::move(t));
        }
    }
    return join(terms);
}

std::string print_polynomial(const Jet2& j, std::string_view x, std::string_view y)
{
    std::vector<Term> terms;
    std::map<std::pair<int, int>, Rational> sorted;
    for (int d = 0; d <= j.order(); ++d) {
        for (int b = 0; b <= d; ++b) {
            if (j.coeff(d - b, b) != 0) {
                sorted[{d - b, b}] = j.coeff(d - b, b);
            }
        }
    }
    for (const auto& [e, c] : sorted) {
        Term t{c, {}};
        push_power(t.factors, x, e.first);
        push_power(t.factors, y, e.second);
        terms.push_back(std::move(t));
    }
    return join(terms);
}

std::string print_polynomial(const LaurentJet& j, std::string_view var) { return join(terms_of(j, var)); }

std::string print_polynomial(const LaurentJet2& j, std::string_view x, std::string_view y)
{
    std::vector<Term> terms;
    for (const auto& [e, c] : j.terms()) {
        Term t{c, {}};
        push_power(t.factors, x, e.first);
        push_power(t.factors, y, e.second);
        terms.push_back(std::move(t));
    }
    return join(terms);
}

std::string print_series(const LaurentJet& j, std::string_view var)
{
    if (j.is_zero()) {
        return "0";
    }
    std::string body = print_polynomial(j, var);
    const int next = j.top_degree() + 1;
    const std::string rest = "O(" + (next == 0 ? std::string("1") : power(var, next)) + ")";
    return body == "0" ? rest : body + " + " + rest;
}

} // namespace cornerjet::cli
