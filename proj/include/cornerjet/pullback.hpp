#pragma once

#include "cornerjet/error.hpp"
#include "cornerjet/laurent_jet.hpp"
#include "cornerjet/laurent_jet2.hpp"
#include "cornerjet/plots.hpp"
#include "cornerjet/tensors.hpp"

#include <optional>
#include <string>

namespace cornerjet {

enum class Smoothness
{
    smooth,            ///< witness valuation >= 0
    pole,              ///< witness valuation = -pole_order
    flat_smooth,       ///< flat plot, pole order within capacity
    flat_indeterminate ///< flat plot, pole order beyond capacity: not decided
};

const char* to_string(Smoothness s) noexcept;

/// Outcome of pulling a tensor back along a plot germ: the dt^k coefficient and its verdict.
struct SmoothnessVerdict
{
    Smoothness status = Smoothness::smooth;
    int pole_order = 0;
    std::optional<LaurentJet> witness; ///< absent for flat plots

    bool is_smooth() const noexcept { return status == Smoothness::smooth || status == Smoothness::flat_smooth; }

    friend bool operator==(const SmoothnessVerdict&, const SmoothnessVerdict&) = default;
};

/// "Smooth", "Pole(2)", "FlatSmooth", "FlatIndeterminate".
std::string describe(const SmoothnessVerdict& v);

/// A tensor rejected as not smooth, with the pullback that shows it.
class NotSmoothError : public Error
{
  public:
    NotSmoothError(const std::string& what, SmoothnessVerdict witness) : Error(what), witness_(std::move(witness)) {}

    const SmoothnessVerdict& witness() const noexcept { return witness_; }

  private:
    SmoothnessVerdict witness_;
};

/**
 * Coefficient of dt^k in P*(tau) = coeff(P(t)) P'(t)^k, reported through t^order (order >= 2).
 *
 * For a boundary germ t^(2m) u(t) and a coefficient with valuation v the witness valuation is
 * 2mv + k(2m - 1), read off exactly. For interior germs the coefficient is evaluated as the Laurent
 * polynomial it spells out. Flat germs never touch jet arithmetic: they are FlatSmooth when the pole
 * order is within the capacity floor(k/2) and FlatIndeterminate otherwise.
 *
 * Throws TruncationError when the witness valuation exceeds `order`.
 */
SmoothnessVerdict pullback_halfline(const HalfLineTensor& tau, const PlotGerm& p, int order);

struct FormPullback
{
    SmoothnessVerdict verdict;
    /// Vanishing order at t = 0 along a boundary germ (smooth, nonzero witness only).
    std::optional<int> vanishing_order;
};

/// pullback_halfline restricted to 1-forms.
FormPullback pullback_form(const HalfLineTensor& alpha, const PlotGerm& p, int order);

/// Coefficients of sq*(tau) for sq(u, v) = (u^2, v^2).
struct Sq2Pullback
{
    LaurentJet2 du2;  ///< 4 u^2 a(u^2, v^2)
    LaurentJet2 dv2;  ///< 4 v^2 b(u^2, v^2)
    LaurentJet2 dudv; ///< 8 u v c(u^2, v^2)

    friend bool operator==(const Sq2Pullback&, const Sq2Pullback&) = default;
};

/// Exact reindexing (i, j) -> (2i, 2j) plus the chain-rule monomials. The output is known through total
/// degree 2N + 2 for an order-N tensor, capped at `order` when given (order >= 2).
Sq2Pullback pullback_sq2(const QuadrantTensor& tau, std::optional<int> order = std::nullopt);

/// dt^2 coefficient a X'^2 + b Y'^2 + 2 c X'Y' along a component-pair path (X, Y), through t^order.
/// Components must be interior or boundary germs; SqMap2 is handled by pullback_sq2.
SmoothnessVerdict pullback_path2(const QuadrantTensor& tau, const QuadrantPlotGerm& p, int order);

} // namespace cornerjet
