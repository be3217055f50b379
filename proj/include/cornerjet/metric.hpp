#pragma once

#include "cornerjet/plots.hpp"
#include "cornerjet/rational.hpp"
#include "cornerjet/tensors.hpp"

#include <optional>
#include <vector>

namespace cornerjet {

/// Finite family of path germs standing in for "every path".
struct TestPlotFamily
{
    std::vector<int> boundary_ms{1, 2, 3};                                            ///< germs t^(2m)
    std::vector<Rational> interior_points{make_rational(1, 2), make_rational(1), make_rational(2)}; ///< x0 + v t
    Rational interior_velocity = 1;

    /// Throws when an entry does not describe a valid plot germ.
    void validate() const;
};

enum class MetricClause
{
    positivity,
    definiteness_zero_required,
    definiteness_nonzero_required
};

const char* to_string(MetricClause c) noexcept;

struct MetricWitness
{
    PlotGerm plot;
    Rational value;     ///< g(gamma)_0(1, 1)
    MetricClause clause;

    friend bool operator==(const MetricWitness&, const MetricWitness&) = default;
};

/**
 * Result of checking positivity and definiteness over a finite family.
 *
 * A rejection is a genuine counterexample. An acceptance only says no member of the family refutes the
 * metric: it is not a proof.
 */
struct MetricVerdict
{
    bool accepted = true;
    std::optional<MetricWitness> witness; ///< present iff rejected

    friend bool operator==(const MetricVerdict&, const MetricVerdict&) = default;
};

/**
 * Checks a symmetric 2-tensor against every germ of the family, first witness wins.
 *
 * Pass 1 evaluates g(gamma)_0(1, 1) at t = 0, boundary germs by increasing m, then interior points in
 * order. Along a boundary germ every pointed 1-form evaluates to 0 (gamma'(0) = 0), so the value must be
 * 0; along an interior germ with nonzero velocity it must be > 0. Pass 2 requires the lowest nonvanishing
 * coefficient of each boundary pullback to be positive, i.e. the metric stays nonnegative along the germ.
 *
 * Throws NotSmoothError for pole order >= 2 and std::invalid_argument for degree != 2.
 */
MetricVerdict check_metric(const HalfLineTensor& g, const TestPlotFamily& family = {});

} // namespace cornerjet
