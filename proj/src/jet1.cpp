#include "cornerjet/jet1.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cornerjet {

Jet1::Jet1(int order)
{
    if (order < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Jet1::Jet1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("jet needs at least one coefficient");
    }
}

Jet1 Jet1::constant(const Rational& c, int order)
{
    Jet1 j(order);
    j.coeffs_[0] = c;
    return j;
}

Jet1 Jet1::monomial(const Rational& c, int degree, int order)
{
    Jet1 j(order);
    if (degree < 0) {
        throw std::invalid_argument("negative degree in Jet1");
    }
    if (degree <= order) {
        j.coeffs_[static_cast<std::size_t>(degree)] = c;
    }
    return j;
}

const Rational& Jet1::operator[](int degree) const
{
    if (degree < 0 || degree > order()) {
        throw TruncationError("degree " + std::to_string(degree) + " outside jet of order " +
                              std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(degree)];
}

void Jet1::set(int degree, const Rational& value)
{
    if (degree < 0 || degree > order()) {
        throw TruncationError("degree " + std::to_string(degree) + " outside jet of order " +
                              std::to_string(order()));
    }
    coeffs_[static_cast<std::size_t>(degree)] = value;
}

bool Jet1::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<int> Jet1::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

Jet1 Jet1::truncated(int order) const
{
    if (order < 0 || order > this->order()) {
        throw TruncationError("cannot truncate order " + std::to_string(this->order()) + " jet to order " +
                              std::to_string(order));
    }
    return Jet1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet1 Jet1::padded(int order) const
{
    if (order <= this->order()) {
        return truncated(order);
    }
    Jet1 j(order);
    std::copy(coeffs_.begin(), coeffs_.end(), j.coeffs_.begin());
    return j;
}

Jet1 Jet1::inverse() const
{
    if (coeffs_[0] == 0) {
        throw Error("jet inverse requires a nonzero constant term");
    }
    const int n = order();
    Jet1 r(n);
    r.coeffs_[0] = 1 / coeffs_[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            acc += coeffs_[i] * r.coeffs_[k - i];
        }
        r.coeffs_[k] = -acc * r.coeffs_[0];
    }
    return r;
}

Jet1 Jet1::pow(unsigned n) const
{
    Jet1 result = constant(1, order());
    Jet1 base = *this;
    while (n != 0) {
        if (n & 1U) {
            result = result * base;
        }
        n >>= 1U;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

Jet1& Jet1::operator+=(const Jet1& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

Jet1& Jet1::operator-=(const Jet1& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

Jet1& Jet1::operator*=(const Jet1& rhs) { return *this = *this * rhs; }

Jet1& Jet1::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

Jet1 operator*(const Jet1& a, const Jet1& b)
{
    const int n = std::min(a.order(), b.order());
    Jet1 r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Jet1 operator-(Jet1 a)
{
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

Jet1 compose(const Jet1& outer, const Jet1& inner)
{
    if (inner[0] != 0) {
        throw Error("composition requires vanishing constant term");
    }
    const auto v = inner.valuation();
    if (!v) {
        return Jet1::constant(outer[0], inner.order());
    }
    const int order = std::min(inner.order(), (outer.order() + 1) * *v - 1);
    const Jet1 x = inner.truncated(order);
    // Horner from the top coefficient down.
    Jet1 acc = Jet1::constant(outer[outer.order()], order);
    for (int i = outer.order() - 1; i >= 0; --i) {
        acc = acc * x;
        acc.set(0, acc[0] + outer[i]);
    }
    return acc;
}

Jet1 differentiate(const Jet1& j)
{
    if (j.order() < 1) {
        throw Error("cannot differentiate order-0 jet");
    }
    Jet1 d(j.order() - 1);
    for (int i = 1; i <= j.order(); ++i) {
        d.set(i - 1, j[i] * i);
    }
    return d;
}

Jet1 whitney_descend(const Jet1& g)
{
    for (int i = 1; i <= g.order(); i += 2) {
        if (g[i] != 0) {
            throw ParityError("jet is not even: nonzero coefficient at degree " + std::to_string(i), i);
        }
    }
    Jet1 h(g.order() / 2);
    for (int i = 0; i <= h.order(); ++i) {
        h.set(i, g[2 * i]);
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Jet1& j)
{
    os << "[";
    for (int i = 0; i <= j.order(); ++i) {
        os << (i ? ", " : "") << j[i];
    }
    return os << "]";
}

} // namespace cornerjet
