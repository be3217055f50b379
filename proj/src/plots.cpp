#include "cornerjet/plots.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cornerjet {

PlotGerm make_boundary_plot(int m, Jet1 unit)
{
    if (m < 1 || unit[0] <= 0) {
        throw Error("not certified nonnegative");
    }
    return PlotGerm(BoundaryGerm{m, std::move(unit)});
}

PlotGerm make_interior_plot(const Rational& base, Jet1 jet)
{
    if (base <= 0) {
        throw Error("interior base point must be positive");
    }
    if (jet[0] != base) {
        throw Error("interior jet constant term " + to_string(jet[0]) + " differs from base point " +
                    to_string(base));
    }
    return PlotGerm(InteriorGerm{base, std::move(jet)});
}

namespace {

// Plot jets are exact polynomials: trailing zeros carry no information.
bool same_polynomial(const Jet1& a, const Jet1& b)
{
    const int n = std::max(a.order(), b.order());
    return a.padded(n) == b.padded(n);
}

} // namespace

bool operator==(const PlotGerm& a, const PlotGerm& b)
{
    if (a.germ_.index() != b.germ_.index()) {
        return false;
    }
    if (a.is_interior()) {
        return a.interior().base == b.interior().base && same_polynomial(a.interior().jet, b.interior().jet);
    }
    if (a.is_boundary()) {
        return a.boundary().m == b.boundary().m && same_polynomial(a.boundary().unit, b.boundary().unit);
    }
    return true;
}

LaurentJet realize_jet(const PlotGerm& p, int order)
{
    if (order < 0) {
        throw std::invalid_argument("order must be non-negative");
    }
    if (p.is_flat()) {
        throw Error("flat germ has no finite jet representation");
    }
    if (p.is_interior()) {
        return LaurentJet::from_jet(p.interior().jet.padded(order));
    }
    const auto& b = p.boundary();
    const int lead = 2 * b.m;
    if (order < lead) {
        throw TruncationError("order " + std::to_string(order) + " below contact order " + std::to_string(lead));
    }
    const Jet1 u = b.unit.padded(order - lead);
    return LaurentJet(lead, std::vector<Rational>(u.coeffs().begin(), u.coeffs().end()));
}

} // namespace cornerjet
