#include "cornerjet/jet2.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cornerjet {

Jet2::Jet2(int order) : order_(order)
{
    if (order < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 2) / 2);
}

std::size_t Jet2::index(int i, int j)
{
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
}

const Rational& Jet2::coeff(int i, int j) const
{
    if (i < 0 || j < 0) {
        throw std::invalid_argument("negative exponent in Jet2");
    }
    if (i + j > order_) {
        throw TruncationError("total degree " + std::to_string(i + j) + " above order " + std::to_string(order_));
    }
    return coeffs_[index(i, j)];
}

void Jet2::set(int i, int j, const Rational& value)
{
    if (i < 0 || j < 0) {
        throw std::invalid_argument("negative exponent in Jet2");
    }
    if (i + j > order_) {
        throw TruncationError("total degree " + std::to_string(i + j) + " above order " + std::to_string(order_));
    }
    coeffs_[index(i, j)] = value;
}

bool Jet2::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

Jet2 Jet2::truncated(int order) const
{
    if (order > order_) {
        throw TruncationError("cannot raise Jet2 order from " + std::to_string(order_) + " to " +
                              std::to_string(order));
    }
    Jet2 r(order);
    r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(r.coeffs_.size()));
    return r;
}

Jet2& Jet2::operator+=(const Jet2& rhs)
{
    if (rhs.order_ < order_) {
        *this = truncated(rhs.order_);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs)
{
    if (rhs.order_ < order_) {
        *this = truncated(rhs.order_);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

Jet2& Jet2::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b)
{
    const int n = std::min(a.order_, b.order_);
    Jet2 r(n);
    for (int da = 0; da <= n; ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            const Rational& ca = a.coeffs_[Jet2::index(da - ja, ja)];
            if (ca == 0) {
                continue;
            }
            for (int db = 0; da + db <= n; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    r.coeffs_[Jet2::index(da - ja + db - jb, ja + jb)] += ca * b.coeffs_[Jet2::index(db - jb, jb)];
                }
            }
        }
    }
    return r;
}

ParityParts<Jet2> parity_decompose2(const Jet2& j)
{
    const int n = j.order();
    ParityParts<Jet2> parts{Jet2(n), Jet2(n), Jet2(n), Jet2(n)};
    for (int d = 0; d <= n; ++d) {
        for (int y = 0; y <= d; ++y) {
            const int x = d - y;
            const Rational& c = j.coeff(x, y);
            if (c == 0) {
                continue;
            }
            Jet2& part = x % 2 == 0 ? (y % 2 == 0 ? parts.even_even : parts.even_odd)
                                    : (y % 2 == 0 ? parts.odd_even : parts.odd_odd);
            part.set(x, y, c);
        }
    }
    return parts;
}

namespace {

void require_sector(const Jet2& g, int pu, int pv, const char* name)
{
    for (int d = 0; d <= g.order(); ++d) {
        for (int y = 0; y <= d; ++y) {
            const int x = d - y;
            if ((x % 2 != pu || y % 2 != pv) && g.coeff(x, y) != 0) {
                throw ParityError(std::string("jet is not ") + name + ": nonzero coefficient at (" +
                                      std::to_string(x) + ", " + std::to_string(y) + ")",
                                  d);
            }
        }
    }
}

} // namespace

Jet2 whitney_descend2(const Jet2& g)
{
    require_sector(g, 0, 0, "even-even");
    Jet2 k(g.order() / 2);
    for (int d = 0; d <= k.order(); ++d) {
        for (int y = 0; y <= d; ++y) {
            k.set(d - y, y, g.coeff(2 * (d - y), 2 * y));
        }
    }
    return k;
}

Jet2 odd_odd_descend2(const Jet2& g)
{
    require_sector(g, 1, 1, "odd-odd");
    if (g.order() < 2) {
        throw TruncationError("odd-odd descent needs order >= 2");
    }
    Jet2 k((g.order() - 2) / 2);
    for (int d = 0; d <= k.order(); ++d) {
        for (int y = 0; y <= d; ++y) {
            k.set(d - y, y, g.coeff(2 * (d - y) + 1, 2 * y + 1));
        }
    }
    return k;
}

std::ostream& operator<<(std::ostream& os, const Jet2& j)
{
    os << "{order " << j.order() << ":";
    for (int d = 0; d <= j.order(); ++d) {
        for (int y = 0; y <= d; ++y) {
            if (j.coeff(d - y, y) != 0) {
                os << " (" << d - y << "," << y << ")=" << j.coeff(d - y, y);
            }
        }
    }
    return os << "}";
}

} // namespace cornerjet
