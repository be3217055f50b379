#pragma once

#include "cornerjet/error.hpp"
#include "cornerjet/pullback.hpp"
#include "cornerjet/tensors.hpp"

#include <string>

namespace cornerjet {

/**
 * Splits f(x) dx^2 into c dx^2/x + r(x) dx^2 by the square-map construction:
 *
 *   g(t) = 4 t^2 f(t^2)          pullback along t -> t^2, an even jet
 *   g(t) = h(t^2)                Whitney descent
 *   h(x) = h(0) + x k(x)         Taylor split
 *   c = h(0)/4, r = k/4
 *
 * For a coefficient known through x^D, g is known through t^(2D+2), h through x^(D+1) and r through x^D,
 * so c / x + r reproduces the input exactly. `order` is used only when the coefficient is the exact zero.
 *
 * Throws NotSmoothError (with the pullback along t^2 as witness) for pole order >= 2.
 */
Decomposition decompose_halfline(const HalfLineTensor& tau, int order = kDefaultOrder);

/// Why a quadrant tensor was rejected.
class QuadrantSmoothnessError : public Error
{
  public:
    enum class Kind
    {
        singular_cross_term,
        not_smooth
    };

    QuadrantSmoothnessError(Kind kind, const std::string& what, ParityReport report)
        : Error(what), kind_(kind), report_(std::move(report))
    {
    }

    Kind kind() const noexcept { return kind_; }
    const ParityReport& report() const noexcept { return report_; }

  private:
    Kind kind_;
    ParityReport report_;
};

/// Sector occupancy of sq*(tau) per component. du^2 and dv^2 must sit in the even-even sector and du dv
/// in the odd-odd one, all at nonnegative exponents.
ParityReport check_gamma_parity(const QuadrantTensor& tau);

/**
 * tau = A(y)/x dx^2 + B(x)/y dy^2 + regular, following the square-map construction on each component:
 * the du^2 coefficient 4 u^2 a(u^2, v^2) descends to K(x, y) = 4 x a(x, y), then A(y) = K(0, y)/4 and
 * the dx^2 regular part is (K - K(0, y)) / (4x). The cross term descends through
 * 4 u v c(u^2, v^2) = u v K(u^2, v^2) and is regular.
 *
 * Throws QuadrantSmoothnessError for a pole in the cross component, a pole of order >= 2, or a pole of a
 * in y (of b in x).
 */
QuadrantDecomposition decompose_quadrant(const QuadrantTensor& tau);

} // namespace cornerjet
