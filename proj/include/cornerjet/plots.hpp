#pragma once

#include "cornerjet/jet1.hpp"
#include "cornerjet/laurent_jet.hpp"
#include "cornerjet/rational.hpp"

#include <utility>
#include <variant>

namespace cornerjet {

// Plot germs into the half-line, recentered at t0 = 0. Only three normal forms exist, so a germ that
// touches the boundary to odd order cannot be built. Jets attached to germs are exact polynomials: the
// realized jet is available at any order.

/// Germ through an interior point x0 > 0.
struct InteriorGerm
{
    Rational base;
    Jet1 jet; ///< constant term equals base
};

/// t^(2m) * unit(t) with unit(0) > 0.
struct BoundaryGerm
{
    int m;
    Jet1 unit;
};

/// All derivatives vanish at t0; no jet data.
struct FlatGerm
{
};

class PlotGerm
{
  public:
    using Variant = std::variant<InteriorGerm, BoundaryGerm, FlatGerm>;

    static PlotGerm flat() { return PlotGerm(FlatGerm{}); }

    const Variant& variant() const noexcept { return germ_; }
    bool is_interior() const noexcept { return std::holds_alternative<InteriorGerm>(germ_); }
    bool is_boundary() const noexcept { return std::holds_alternative<BoundaryGerm>(germ_); }
    bool is_flat() const noexcept { return std::holds_alternative<FlatGerm>(germ_); }

    const InteriorGerm& interior() const { return std::get<InteriorGerm>(germ_); }
    const BoundaryGerm& boundary() const { return std::get<BoundaryGerm>(germ_); }

    friend bool operator==(const PlotGerm& a, const PlotGerm& b);

  private:
    explicit PlotGerm(Variant v) : germ_(std::move(v)) {}

    friend PlotGerm make_boundary_plot(int m, Jet1 unit);
    friend PlotGerm make_interior_plot(const Rational& base, Jet1 jet);

    Variant germ_;
};

/// Throws Error("not certified nonnegative") when m < 1 or unit(0) <= 0.
PlotGerm make_boundary_plot(int m, Jet1 unit);

/// Throws when base <= 0 or the jet's constant term differs from base.
PlotGerm make_interior_plot(const Rational& base, Jet1 jet);

/// Jet of the plot through degree `order`: valuation 0 (interior) or 2m (boundary).
/// Throws for flat germs, which have no finite jet representation.
LaurentJet realize_jet(const PlotGerm& p, int order);

/// The square map (u, v) -> (u^2, v^2) onto the quadrant.
struct SqMap2
{
    friend bool operator==(const SqMap2&, const SqMap2&) = default;
};

/// Path t -> (px(t), py(t)) into the quadrant.
struct PlotPair
{
    PlotGerm px;
    PlotGerm py;
};

class QuadrantPlotGerm
{
  public:
    using Variant = std::variant<PlotPair, SqMap2>;

    static QuadrantPlotGerm sq() { return QuadrantPlotGerm(SqMap2{}); }
    static QuadrantPlotGerm pair(PlotGerm px, PlotGerm py) { return QuadrantPlotGerm(PlotPair{std::move(px), std::move(py)}); }

    const Variant& variant() const noexcept { return germ_; }
    bool is_sq() const noexcept { return std::holds_alternative<SqMap2>(germ_); }
    const PlotPair& components() const { return std::get<PlotPair>(germ_); }

  private:
    explicit QuadrantPlotGerm(Variant v) : germ_(std::move(v)) {}

    Variant germ_;
};

} // namespace cornerjet
