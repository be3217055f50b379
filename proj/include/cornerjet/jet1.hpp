#pragma once

#include "cornerjet/rational.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace cornerjet {

/**
 * Truncated power series c_0 + c_1 t + ... + c_N t^N in one variable, exact rational coefficients.
 *
 * Degrees above order() are unknown. Binary operations on jets of different order return a jet of the
 * smaller order, so every reported coefficient is exact.
 */
class Jet1
{
  public:
    /// Zero jet known through degree `order`.
    explicit Jet1(int order = 0);

    /// Coefficients by degree; order is coeffs.size() - 1.
    explicit Jet1(std::vector<Rational> coeffs);

    static Jet1 constant(const Rational& c, int order);
    static Jet1 monomial(const Rational& c, int degree, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^degree; throws TruncationError above the order.
    const Rational& operator[](int degree) const;
    void set(int degree, const Rational& value);

    bool is_zero() const;

    /// Lowest degree with a nonzero coefficient, if any is known.
    std::optional<int> valuation() const;

    /// Drops degrees above `order` (must not exceed the current order).
    Jet1 truncated(int order) const;

    /// Pads with zero coefficients up to `order`. Only valid when the jet spells out an exact polynomial.
    Jet1 padded(int order) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    Jet1 inverse() const;
    Jet1 pow(unsigned n) const;

    Jet1& operator+=(const Jet1& rhs);
    Jet1& operator-=(const Jet1& rhs);
    Jet1& operator*=(const Jet1& rhs);
    Jet1& operator*=(const Rational& s);

    friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
    friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
    friend Jet1 operator*(const Jet1& a, const Jet1& b);
    friend Jet1 operator*(Jet1 a, const Rational& s) { return a *= s; }
    friend Jet1 operator*(const Rational& s, Jet1 a) { return a *= s; }
    friend Jet1 operator-(Jet1 a);

    friend bool operator==(const Jet1&, const Jet1&) = default;

  private:
    std::vector<Rational> coeffs_;
};

/**
 * Jet of outer(inner(t)). The inner jet must have zero constant term.
 *
 * Result order is inner.order(), lowered to (outer.order() + 1) * v - 1 when the outer jet is too short
 * to fix higher degrees (v is the valuation of inner).
 */
Jet1 compose(const Jet1& outer, const Jet1& inner);

/// d/dt, order N - 1. Throws on order-0 input.
Jet1 differentiate(const Jet1& j);

/// For an even jet g returns h with g(t) = h(t^2), order floor(N/2). Throws ParityError otherwise.
Jet1 whitney_descend(const Jet1& g);

std::ostream& operator<<(std::ostream& os, const Jet1& j);

} // namespace cornerjet
