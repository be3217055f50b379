#pragma once

#include "cornerjet/jet2.hpp"
#include "cornerjet/rational.hpp"

#include <iosfwd>
#include <map>
#include <utility>

namespace cornerjet {

/**
 * Sparse two-variable Laurent jet: a finite map (i, j) -> c_{i,j} with integer exponents, known for
 * total degree i + j <= order(). No zero coefficient is ever stored.
 */
class LaurentJet2
{
  public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    explicit LaurentJet2(int order = kDefaultOrder) : order_(order) {}

    /// Terms above the order are dropped; zero coefficients are discarded.
    LaurentJet2(Terms terms, int order);

    static LaurentJet2 from_jet(const Jet2& j);
    static LaurentJet2 monomial(const Rational& c, int i, int j, int order);

    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Tight (v_x, v_y); (0, 0) for the zero jet.
    Exponent valuations() const;

    Rational coeff(int i, int j) const;

    /// Power-series view through total degree `order`; requires both valuations >= 0.
    Jet2 to_jet(int order) const;

    LaurentJet2 truncated(int order) const;

    /// Multiplication by c * x^a * y^b; the order grows by a + b.
    LaurentJet2 times_monomial(const Rational& c, int a, int b) const;

    /// (x, y) -> (u^2, v^2): exponent (i, j) moves to (2i, 2j), order doubles.
    LaurentJet2 substitute_squares() const;

    LaurentJet2& operator*=(const Rational& s);

    friend LaurentJet2 operator+(const LaurentJet2& a, const LaurentJet2& b);
    friend LaurentJet2 operator-(const LaurentJet2& a, const LaurentJet2& b);
    friend LaurentJet2 operator-(LaurentJet2 a);
    friend LaurentJet2 operator*(LaurentJet2 a, const Rational& s) { return a *= s; }
    friend LaurentJet2 operator*(const Rational& s, LaurentJet2 a) { return a *= s; }

    friend bool operator==(const LaurentJet2&, const LaurentJet2&) = default;

  private:
    int order_;
    Terms terms_;
};

/// Sector split by the parity of each exponent (negative exponents included).
ParityParts<LaurentJet2> parity_decompose2(const LaurentJet2& j);

std::ostream& operator<<(std::ostream& os, const LaurentJet2& j);

} // namespace cornerjet
