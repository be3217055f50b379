#pragma once

#include "cornerjet/jet1.hpp"
#include "cornerjet/rational.hpp"

#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

namespace cornerjet {

/**
 * Truncated Laurent series t^v (c_0 + c_1 t + ... + c_L t^L) with integer valuation v.
 *
 * Canonical form: a nonzero jet has c_0 != 0; the zero jet has no coefficients and valuation 0.
 * Coefficients are known for degrees v .. top_degree(); trailing zeros carry precision.
 * The zero jet is exact: it is the identity for addition at any precision.
 *
 * Precision is relative, as for p-adic numbers: products and quotients keep min(length) terms.
 */
class LaurentJet
{
  public:
    static constexpr int kExactTop = std::numeric_limits<int>::max();

    LaurentJet() = default;

    /// Coefficients for degrees valuation, valuation + 1, ...; leading zeros are stripped.
    LaurentJet(int valuation, std::vector<Rational> coeffs);

    /// Jet with valuation >= 0 from a power-series jet.
    static LaurentJet from_jet(const Jet1& j);

    /// c * t^degree, known through `top_degree`.
    static LaurentJet monomial(const Rational& c, int degree, int top_degree);

    int valuation() const noexcept { return valuation_; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    std::size_t length() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Highest known degree; kExactTop for the zero jet.
    int top_degree() const noexcept;

    /// max(0, -valuation).
    int pole_order() const noexcept { return valuation_ < 0 ? -valuation_ : 0; }

    /// Coefficient at an absolute degree; throws TruncationError above top_degree().
    Rational coeff(int degree) const;
    const Rational& leading() const;

    /// Unit part c_0 + c_1 t + ... as a Jet1 of order length - 1.
    Jet1 unit() const;

    /// Power-series view through degree `order`. Requires valuation >= 0.
    Jet1 to_jet(int order) const;

    /// Keeps degrees <= top_degree.
    LaurentJet truncated(int top_degree) const;

    /// Multiplication by t^k.
    LaurentJet shifted(int k) const;

    /// The series in t^e (e >= 1): coefficient of t^i moves to t^(e*i).
    LaurentJet substitute_power(int e) const;

    LaurentJet inverse() const;
    LaurentJet pow(int n) const;

    LaurentJet& operator*=(const Rational& s);

    friend LaurentJet operator+(const LaurentJet& a, const LaurentJet& b);
    friend LaurentJet operator-(const LaurentJet& a, const LaurentJet& b);
    friend LaurentJet operator-(LaurentJet a);
    friend LaurentJet operator*(const LaurentJet& a, const LaurentJet& b);
    friend LaurentJet operator*(LaurentJet a, const Rational& s) { return a *= s; }
    friend LaurentJet operator*(const Rational& s, LaurentJet a) { return a *= s; }

    friend bool operator==(const LaurentJet&, const LaurentJet&) = default;

  private:
    void normalize();

    int valuation_ = 0;
    std::vector<Rational> coeffs_;
};

/// num / den with valuation num.valuation() - den.valuation(). Throws on a zero denominator.
LaurentJet laurent_divide(const LaurentJet& num, const LaurentJet& den);

/// outer(inner(t)) for an inner jet of valuation >= 1.
LaurentJet compose(const LaurentJet& outer, const LaurentJet& inner);

std::ostream& operator<<(std::ostream& os, const LaurentJet& j);

} // namespace cornerjet
