#pragma once

#include "cornerjet/rational.hpp"

#include <iosfwd>
#include <vector>

namespace cornerjet {

/// Truncated power series in (u, v): coefficients c_{i,j} for i + j <= order, stored triangularly.
class Jet2
{
  public:
    explicit Jet2(int order = 0);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Throws TruncationError when i + j exceeds the order, std::invalid_argument on negative indices.
    const Rational& coeff(int i, int j) const;
    void set(int i, int j, const Rational& value);

    bool is_zero() const;
    Jet2 truncated(int order) const;

    Jet2& operator+=(const Jet2& rhs);
    Jet2& operator-=(const Jet2& rhs);
    Jet2& operator*=(const Rational& s);

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(Jet2 a, const Rational& s) { return a *= s; }
    friend Jet2 operator*(const Rational& s, Jet2 a) { return a *= s; }

    friend bool operator==(const Jet2&, const Jet2&) = default;

  private:
    static std::size_t index(int i, int j);

    int order_;
    std::vector<Rational> coeffs_;
};

/// The four sign-parity sectors of a two-variable jet; `even_odd` means even in u, odd in v.
template <typename J>
struct ParityParts
{
    J even_even;
    J even_odd;
    J odd_even;
    J odd_odd;
};

ParityParts<Jet2> parity_decompose2(const Jet2& j);

/// K with g(u, v) = K(u^2, v^2). Throws ParityError unless g is even in both variables.
Jet2 whitney_descend2(const Jet2& g);

/// K with g(u, v) = u v K(u^2, v^2). Throws ParityError unless g is odd in both variables.
Jet2 odd_odd_descend2(const Jet2& g);

std::ostream& operator<<(std::ostream& os, const Jet2& j);

} // namespace cornerjet
