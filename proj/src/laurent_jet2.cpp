#include "cornerjet/laurent_jet2.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace cornerjet {

LaurentJet2::LaurentJet2(Terms terms, int order) : order_(order)
{
    for (auto& [e, c] : terms) {
        if (c != 0 && e.first + e.second <= order_) {
            terms_.emplace(e, std::move(c));
        }
    }
}

LaurentJet2 LaurentJet2::from_jet(const Jet2& j)
{
    Terms terms;
    for (int d = 0; d <= j.order(); ++d) {
        for (int y = 0; y <= d; ++y) {
            const Rational& c = j.coeff(d - y, y);
            if (c != 0) {
                terms.emplace(Exponent{d - y, y}, c);
            }
        }
    }
    return LaurentJet2(std::move(terms), j.order());
}

LaurentJet2 LaurentJet2::monomial(const Rational& c, int i, int j, int order)
{
    return LaurentJet2(Terms{{{i, j}, c}}, order);
}

LaurentJet2::Exponent LaurentJet2::valuations() const
{
    if (terms_.empty()) {
        return {0, 0};
    }
    Exponent v{terms_.begin()->first.first, terms_.begin()->first.second};
    for (const auto& [e, c] : terms_) {
        v.first = std::min(v.first, e.first);
        v.second = std::min(v.second, e.second);
    }
    return v;
}

Rational LaurentJet2::coeff(int i, int j) const
{
    if (i + j > order_) {
        throw TruncationError("total degree " + std::to_string(i + j) + " above order " + std::to_string(order_));
    }
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

Jet2 LaurentJet2::to_jet(int order) const
{
    const auto [vx, vy] = valuations();
    if (vx < 0 || vy < 0) {
        throw Error("negative valuation (" + std::to_string(vx) + ", " + std::to_string(vy) +
                    ") has no power-series view");
    }
    if (order > order_) {
        throw TruncationError("requested order " + std::to_string(order) + " above " + std::to_string(order_));
    }
    Jet2 j(order);
    for (const auto& [e, c] : terms_) {
        if (e.first + e.second <= order) {
            j.set(e.first, e.second, c);
        }
    }
    return j;
}

LaurentJet2 LaurentJet2::truncated(int order) const
{
    return LaurentJet2(terms_, std::min(order, order_));
}

LaurentJet2 LaurentJet2::times_monomial(const Rational& c, int a, int b) const
{
    Terms terms;
    for (const auto& [e, coeff] : terms_) {
        terms.emplace(Exponent{e.first + a, e.second + b}, coeff * c);
    }
    return LaurentJet2(std::move(terms), order_ + a + b);
}

LaurentJet2 LaurentJet2::substitute_squares() const
{
    Terms terms;
    for (const auto& [e, c] : terms_) {
        terms.emplace(Exponent{2 * e.first, 2 * e.second}, c);
    }
    return LaurentJet2(std::move(terms), 2 * order_);
}

LaurentJet2& LaurentJet2::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= s;
    }
    return *this;
}

LaurentJet2 operator+(const LaurentJet2& a, const LaurentJet2& b)
{
    LaurentJet2::Terms terms = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        terms[e] += c;
    }
    return LaurentJet2(std::move(terms), std::min(a.order_, b.order_));
}

LaurentJet2 operator-(LaurentJet2 a)
{
    for (auto& [e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

LaurentJet2 operator-(const LaurentJet2& a, const LaurentJet2& b) { return a + (-b); }

ParityParts<LaurentJet2> parity_decompose2(const LaurentJet2& j)
{
    LaurentJet2::Terms ee, eo, oe, oo;
    for (const auto& [e, c] : j.terms()) {
        const bool odd_x = (e.first % 2) != 0;
        const bool odd_y = (e.second % 2) != 0;
        auto& target = odd_x ? (odd_y ? oo : oe) : (odd_y ? eo : ee);
        target.emplace(e, c);
    }
    const int n = j.order();
    return {LaurentJet2(std::move(ee), n), LaurentJet2(std::move(eo), n), LaurentJet2(std::move(oe), n),
            LaurentJet2(std::move(oo), n)};
}

std::ostream& operator<<(std::ostream& os, const LaurentJet2& j)
{
    os << "{order " << j.order() << ":";
    for (const auto& [e, c] : j.terms()) {
        os << " (" << e.first << "," << e.second << ")=" << c;
    }
    return os << "}";
}

} // namespace cornerjet
