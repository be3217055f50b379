#include "cornerjet/pullback.hpp"

#include "cornerjet/capacity.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cornerjet {

const char* to_string(Smoothness s) noexcept
{
    switch (s) {
    case Smoothness::smooth:
        return "Smooth";
    case Smoothness::pole:
        return "Pole";
    case Smoothness::flat_smooth:
        return "FlatSmooth";
    case Smoothness::flat_indeterminate:
        return "FlatIndeterminate";
    }
    return "?";
}

std::string describe(const SmoothnessVerdict& v)
{
    if (v.status == Smoothness::pole) {
        return "Pole(" + std::to_string(v.pole_order) + ")";
    }
    return to_string(v.status);
}

namespace {

SmoothnessVerdict verdict_from(LaurentJet witness)
{
    SmoothnessVerdict v;
    if (!witness.is_zero() && witness.valuation() < 0) {
        v.status = Smoothness::pole;
        v.pole_order = -witness.valuation();
    }
    v.witness = std::move(witness);
    return v;
}

/// sum_i c_i x^i evaluated at a jet x with nonzero constant term.
Jet1 evaluate_laurent_polynomial(const LaurentJet& coeff, const Jet1& x)
{
    const int n = x.order();
    Jet1 acc(n);
    if (coeff.is_zero()) {
        return acc;
    }
    const Jet1 x_inv = x.inverse();
    for (int d = coeff.valuation(); d <= coeff.top_degree(); ++d) {
        const Rational c = coeff.coeff(d);
        if (c == 0) {
            continue;
        }
        const Jet1 power = d >= 0 ? x.pow(static_cast<unsigned>(d)) : x_inv.pow(static_cast<unsigned>(-d));
        acc += power * c;
    }
    return acc;
}

SmoothnessVerdict pullback_interior(const HalfLineTensor& tau, const InteriorGerm& g, int order)
{
    const Jet1 p = g.jet.padded(order + 1);
    const Jet1 x = p.truncated(order);
    Jet1 w = evaluate_laurent_polynomial(tau.coeff(), x);
    if (tau.degree() > 0) {
        w *= differentiate(p).pow(static_cast<unsigned>(tau.degree()));
    }
    return verdict_from(LaurentJet::from_jet(w));
}

SmoothnessVerdict pullback_boundary(const HalfLineTensor& tau, const BoundaryGerm& g, int order)
{
    const LaurentJet& coeff = tau.coeff();
    if (coeff.is_zero()) {
        return verdict_from(LaurentJet{});
    }
    const int k = tau.degree();
    const int valuation = 2 * g.m * coeff.valuation() + k * (2 * g.m - 1);
    if (valuation > order) {
        throw TruncationError("witness valuation " + std::to_string(valuation) + " exceeds order " +
                              std::to_string(order));
    }
    // Relative terms needed, plus one for the derivative.
    const int relative = order - valuation + 1;
    const int top = 2 * g.m + relative;
    const LaurentJet p = realize_jet(make_boundary_plot(g.m, g.unit), top);
    LaurentJet w = compose(coeff, p);
    if (k > 0) {
        w = w * LaurentJet::from_jet(differentiate(p.to_jet(top))).pow(k);
    }
    return verdict_from(w.truncated(order));
}

} // namespace

SmoothnessVerdict pullback_halfline(const HalfLineTensor& tau, const PlotGerm& p, int order)
{
    if (order < 2) {
        throw std::invalid_argument("pullback order must be at least 2");
    }
    if (p.is_flat()) {
        SmoothnessVerdict v;
        v.status = tau.pole_order() <= capacity(tau.degree()) ? Smoothness::flat_smooth
                                                              : Smoothness::flat_indeterminate;
        return v;
    }
    if (p.is_interior()) {
        return pullback_interior(tau, p.interior(), order);
    }
    return pullback_boundary(tau, p.boundary(), order);
}

FormPullback pullback_form(const HalfLineTensor& alpha, const PlotGerm& p, int order)
{
    if (alpha.degree() != 1) {
        throw std::invalid_argument("pullback_form expects a 1-form, got degree " + std::to_string(alpha.degree()));
    }
    FormPullback r{pullback_halfline(alpha, p, order), std::nullopt};
    if (p.is_boundary() && r.verdict.status == Smoothness::smooth && !r.verdict.witness->is_zero()) {
        r.vanishing_order = r.verdict.witness->valuation();
    }
    return r;
}

Sq2Pullback pullback_sq2(const QuadrantTensor& tau, std::optional<int> order)
{
    if (order && *order < 2) {
        throw std::invalid_argument("pullback order must be at least 2");
    }
    Sq2Pullback r{tau.a().substitute_squares().times_monomial(4, 2, 0),
                  tau.b().substitute_squares().times_monomial(4, 0, 2),
                  tau.c().substitute_squares().times_monomial(8, 1, 1)};
    if (order) {
        for (auto* comp : {&r.du2, &r.dv2, &r.dudv}) {
            LaurentJet2 cut = comp->truncated(*order);
            if (cut.is_zero() && !comp->is_zero()) {
                throw TruncationError("pulled-back component vanishes through total degree " + std::to_string(*order));
            }
            *comp = std::move(cut);
        }
    }
    return r;
}

namespace {

LaurentJet realize_component(const PlotGerm& p, int relative)
{
    if (p.is_flat()) {
        throw Error("flat components are not supported for quadrant paths");
    }
    const int lead = p.is_boundary() ? 2 * p.boundary().m : 0;
    return realize_jet(p, lead + relative);
}

LaurentJet derivative(const LaurentJet& p)
{
    return LaurentJet::from_jet(differentiate(p.to_jet(p.top_degree())));
}

/// sum c_ij X^i Y^j.
LaurentJet evaluate(const LaurentJet2& f, const LaurentJet& x, const LaurentJet& y)
{
    LaurentJet acc;
    for (const auto& [e, c] : f.terms()) {
        acc = acc + x.pow(e.first) * y.pow(e.second) * c;
    }
    return acc;
}

} // namespace

SmoothnessVerdict pullback_path2(const QuadrantTensor& tau, const QuadrantPlotGerm& p, int order)
{
    if (order < 2) {
        throw std::invalid_argument("pullback order must be at least 2");
    }
    if (p.is_sq()) {
        throw std::invalid_argument("the square map is a two-parameter plot; use pullback_sq2");
    }
    int spread = 0;
    for (const auto* comp : {&tau.a(), &tau.b(), &tau.c()}) {
        for (const auto& [e, c] : comp->terms()) {
            spread = std::max({spread, std::abs(e.first), std::abs(e.second)});
        }
    }
    const int relative = order + 2 + 4 * (spread + 1);
    const LaurentJet x = realize_component(p.components().px, relative);
    const LaurentJet y = realize_component(p.components().py, relative);
    const LaurentJet dx = derivative(x);
    const LaurentJet dy = derivative(y);
    const LaurentJet w = evaluate(tau.a(), x, y) * dx * dx + evaluate(tau.b(), x, y) * dy * dy +
                         evaluate(tau.c(), x, y) * dx * dy * Rational(2);
    if (!w.is_zero() && w.valuation() > order) {
        throw TruncationError("witness valuation " + std::to_string(w.valuation()) + " exceeds order " +
                              std::to_string(order));
    }
    return verdict_from(w.truncated(order));
}

} // namespace cornerjet
