#include "cornerjet/metric.hpp"

#include "cornerjet/pullback.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cornerjet {

void TestPlotFamily::validate() const
{
    for (int m : boundary_ms) {
        if (m < 1) {
            throw std::invalid_argument("boundary germ exponent m must be >= 1, got " + std::to_string(m));
        }
    }
    for (const auto& x0 : interior_points) {
        if (x0 <= 0) {
            throw std::invalid_argument("interior point must be positive, got " + to_string(x0));
        }
    }
    if (interior_velocity == 0) {
        throw std::invalid_argument("interior velocity must be nonzero");
    }
}

const char* to_string(MetricClause c) noexcept
{
    switch (c) {
    case MetricClause::positivity:
        return "positivity";
    case MetricClause::definiteness_zero_required:
        return "definiteness-zero-required";
    case MetricClause::definiteness_nonzero_required:
        return "definiteness-nonzero-required";
    }
    return "?";
}

namespace {

constexpr int kMetricOrder = 4;

MetricVerdict reject(PlotGerm plot, Rational value, MetricClause clause)
{
    return {false, MetricWitness{std::move(plot), std::move(value), clause}};
}

} // namespace

MetricVerdict check_metric(const HalfLineTensor& g, const TestPlotFamily& family)
{
    if (g.degree() != 2) {
        throw std::invalid_argument("a metric is a symmetric 2-tensor, got degree " + std::to_string(g.degree()));
    }
    family.validate();
    const PlotGerm sq = make_boundary_plot(1, Jet1::constant(1, 0));
    if (g.pole_order() >= 2) {
        throw NotSmoothError("not a smooth tensor", pullback_halfline(g, sq, 2));
    }

    struct Probe
    {
        PlotGerm plot;
        SmoothnessVerdict pullback;
    };
    std::vector<Probe> boundary;
    for (int m : family.boundary_ms) {
        PlotGerm plot = make_boundary_plot(m, Jet1::constant(1, 0));
        // Pole order <= 1 keeps the witness valuation 2mv + 2(2m - 1) >= 0; ask for a few terms past it.
        const int lead = 2 * m * g.coeff().valuation() + 2 * (2 * m - 1);
        const int order = std::max(2, lead + kMetricOrder);
        SmoothnessVerdict v = pullback_halfline(g, plot, order);
        boundary.push_back({std::move(plot), std::move(v)});
    }

    for (const auto& [plot, v] : boundary) {
        const Rational value = v.witness->coeff(0);
        if (value < 0) {
            return reject(plot, value, MetricClause::positivity);
        }
        if (value != 0) {
            return reject(plot, value, MetricClause::definiteness_zero_required);
        }
    }
    for (const auto& x0 : family.interior_points) {
        PlotGerm plot = make_interior_plot(x0, Jet1(std::vector<Rational>{x0, family.interior_velocity}));
        const SmoothnessVerdict v = pullback_halfline(g, plot, kMetricOrder);
        const Rational value = v.witness->coeff(0);
        if (value < 0) {
            return reject(std::move(plot), value, MetricClause::positivity);
        }
        if (value == 0) {
            return reject(std::move(plot), value, MetricClause::definiteness_nonzero_required);
        }
    }
    for (const auto& [plot, v] : boundary) {
        if (!v.witness->is_zero() && v.witness->leading() < 0) {
            return reject(plot, v.witness->coeff(0), MetricClause::positivity);
        }
    }
    return {};
}

} // namespace cornerjet
