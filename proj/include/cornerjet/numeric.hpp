#pragma once

#include "cornerjet/rational.hpp"
#include "cornerjet/tensors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cornerjet {

/// Exact polynomial c_0 + c_1 t + ... (no truncation; trailing zeros trimmed).
class RationalPolynomial
{
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; } ///< -1 for zero

    RationalPolynomial derivative() const;
    Rational operator()(const Rational& t) const;
    double operator()(double t) const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  private:
    std::vector<Rational> coeffs_;
    std::vector<double> approx_;
};

/// sum of p_i(t)^2: nonnegative everywhere by construction.
struct SumOfSquares
{
    std::vector<RationalPolynomial> terms;
};

inline constexpr int kDefaultGrid = 1024;
inline constexpr double kDefaultTolerance = 1e-9;

/// A polynomial sampled on grid_n + 1 equispaced points of [a, b].
struct SampledFunction
{
    std::variant<RationalPolynomial, SumOfSquares> representation;
    Rational a;
    Rational b;
    int grid_n = kDefaultGrid;

    /// Throws std::invalid_argument unless a < b and grid_n >= 16.
    void validate() const;

    RationalPolynomial expanded() const;
    bool is_sum_of_squares() const noexcept { return std::holds_alternative<SumOfSquares>(representation); }
};

/**
 * Where sup |f''| is taken. The Taylor step behind the inequality uses f''(xi) for xi between t and
 * t - f'(t)/C, which can leave I. `taylor_reach` widens I by H = max_I |f'| / C_I and retakes the sup
 * there; for that C every such xi lies in the window. `interval` uses I alone; `fixed` widens by `margin`.
 */
struct CurvatureWindow
{
    enum class Mode
    {
        interval,
        fixed,
        taylor_reach
    };

    Mode mode = Mode::taylor_reach;
    double margin = 0.0;
};

struct GlaeserLandauReport
{
    double C = 0.0;             ///< grid sup of |f''| over the curvature window
    double max_violation = 0.0; ///< grid max of f'(t)^2 - 2 C f(t) over I
    bool pass = false;          ///< max_violation <= tol
    double tol = kDefaultTolerance;
    double worst_t = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::string note;

    friend bool operator==(const GlaeserLandauReport&, const GlaeserLandauReport&) = default;
};

/// Derivatives are exact (polynomial); only evaluation is in double precision.
/// Throws Error("function not nonnegative on interval") when f < -tol at a grid point.
GlaeserLandauReport glaeser_landau_check(const SampledFunction& f, double tol = kDefaultTolerance,
                                         CurvatureWindow window = {});

struct ProbeReport
{
    double sup = 0.0;                   ///< on the finest grid
    std::vector<double> refinement_sups; ///< grids n, 4n, 16n
    std::size_t skipped_points = 0;     ///< exact zeros of P on the finest grid
    double sup_second_derivative = 0.0; ///< sup |P''| on the finest grid
    std::optional<double> bound;        ///< 2 |c| sup |P''| when tau = c dx^2 / x
    bool bounded = true;
    bool within_bound = true;

    friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

/**
 * Samples coeff(P(t)) P'(t)^k on successively refined grids. Reported unbounded when the sup on the
 * 16n grid exceeds twice the sup on the n grid (plus tol) and grew at every refinement.
 */
ProbeReport numeric_pullback_probe(const HalfLineTensor& tau, const SampledFunction& plot,
                                   double tol = kDefaultTolerance);

} // namespace cornerjet
