#include "cornerjet/laurent_jet.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cornerjet {

LaurentJet::LaurentJet(int valuation, std::vector<Rational> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs))
{
    normalize();
}

void LaurentJet::normalize()
{
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        valuation_ = 0;
        return;
    }
    valuation_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
}

LaurentJet LaurentJet::from_jet(const Jet1& j)
{
    return LaurentJet(0, std::vector<Rational>(j.coeffs().begin(), j.coeffs().end()));
}

LaurentJet LaurentJet::monomial(const Rational& c, int degree, int top_degree)
{
    if (top_degree < degree) {
        throw TruncationError("monomial of degree " + std::to_string(degree) + " above top degree " +
                              std::to_string(top_degree));
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(top_degree - degree) + 1);
    coeffs[0] = c;
    return LaurentJet(degree, std::move(coeffs));
}

int LaurentJet::top_degree() const noexcept
{
    return is_zero() ? kExactTop : valuation_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentJet::coeff(int degree) const
{
    if (is_zero() || degree < valuation_) {
        return 0;
    }
    if (degree > top_degree()) {
        throw TruncationError("degree " + std::to_string(degree) + " above top degree " +
                              std::to_string(top_degree()));
    }
    return coeffs_[static_cast<std::size_t>(degree - valuation_)];
}

const Rational& LaurentJet::leading() const
{
    if (is_zero()) {
        throw Error("zero jet has no leading coefficient");
    }
    return coeffs_.front();
}

Jet1 LaurentJet::unit() const
{
    if (is_zero()) {
        throw Error("zero jet has no unit part");
    }
    return Jet1(coeffs_);
}

Jet1 LaurentJet::to_jet(int order) const
{
    if (order < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
    if (valuation_ < 0) {
        throw Error("negative valuation " + std::to_string(valuation_) + " has no power-series view");
    }
    if (order > top_degree()) {
        throw TruncationError("requested order " + std::to_string(order) + " above top degree " +
                              std::to_string(top_degree()));
    }
    Jet1 j(order);
    for (int d = valuation_; d <= order && !is_zero(); ++d) {
        j.set(d, coeffs_[static_cast<std::size_t>(d - valuation_)]);
    }
    return j;
}

LaurentJet LaurentJet::truncated(int top_degree) const
{
    if (is_zero() || top_degree >= this->top_degree()) {
        return *this;
    }
    if (top_degree < valuation_) {
        return {};
    }
    return LaurentJet(valuation_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (top_degree - valuation_) + 1));
}

LaurentJet LaurentJet::shifted(int k) const
{
    LaurentJet r = *this;
    if (!r.is_zero()) {
        r.valuation_ += k;
    }
    return r;
}

LaurentJet LaurentJet::substitute_power(int e) const
{
    if (e < 1) {
        throw std::invalid_argument("substitution exponent must be positive");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> coeffs((coeffs_.size() - 1) * static_cast<std::size_t>(e) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs[i * static_cast<std::size_t>(e)] = coeffs_[i];
    }
    return LaurentJet(valuation_ * e, std::move(coeffs));
}

LaurentJet LaurentJet::inverse() const
{
    if (is_zero()) {
        throw Error("division by the zero jet");
    }
    const Jet1 u = unit().inverse();
    return LaurentJet(-valuation_, std::vector<Rational>(u.coeffs().begin(), u.coeffs().end()));
}

LaurentJet LaurentJet::pow(int n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    if (is_zero()) {
        if (n == 0) {
            throw Error("zero jet raised to the power 0");
        }
        return {};
    }
    const Jet1 u = unit().pow(static_cast<unsigned>(n));
    return LaurentJet(valuation_ * n, std::vector<Rational>(u.coeffs().begin(), u.coeffs().end()));
}

LaurentJet& LaurentJet::operator*=(const Rational& s)
{
    if (s == 0) {
        return *this = LaurentJet{};
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

LaurentJet operator+(const LaurentJet& a, const LaurentJet& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const int lo = std::min(a.valuation_, b.valuation_);
    const int top = std::min(a.top_degree(), b.top_degree());
    std::vector<Rational> coeffs(static_cast<std::size_t>(top - lo) + 1);
    for (int d = lo; d <= top; ++d) {
        coeffs[static_cast<std::size_t>(d - lo)] = a.coeff(d) + b.coeff(d);
    }
    return LaurentJet(lo, std::move(coeffs));
}

LaurentJet operator-(LaurentJet a)
{
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

LaurentJet operator-(const LaurentJet& a, const LaurentJet& b) { return a + (-b); }

LaurentJet operator*(const LaurentJet& a, const LaurentJet& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const Jet1 u = a.unit().truncated(static_cast<int>(std::min(a.length(), b.length())) - 1) * b.unit();
    return LaurentJet(a.valuation_ + b.valuation_, std::vector<Rational>(u.coeffs().begin(), u.coeffs().end()));
}

LaurentJet laurent_divide(const LaurentJet& num, const LaurentJet& den)
{
    if (den.is_zero()) {
        throw Error("division by the zero jet");
    }
    return num * den.inverse();
}

LaurentJet compose(const LaurentJet& outer, const LaurentJet& inner)
{
    if (outer.is_zero()) {
        return {};
    }
    if (inner.is_zero() || inner.valuation() < 1) {
        throw Error("composition requires vanishing constant term");
    }
    // outer = t^v w(t): w(inner) is a power series, inner^v carries the valuation.
    const Jet1 w_of_inner = compose(outer.unit(), inner.to_jet(inner.top_degree()));
    return LaurentJet::from_jet(w_of_inner) * inner.pow(outer.valuation());
}

std::ostream& operator<<(std::ostream& os, const LaurentJet& j)
{
    os << "t^" << j.valuation() << " * [";
    for (std::size_t i = 0; i < j.length(); ++i) {
        os << (i ? ", " : "") << j.coeffs()[i];
    }
    return os << "]";
}

} // namespace cornerjet
