#include "cornerjet/error.hpp"
#include "cornerjet/plots.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace cornerjet;
using cornerjet::testing::Gen;

TEST_CASE("make_boundary_plot")
{
    const PlotGerm sq = make_boundary_plot(1, Jet1::constant(1, 0));
    CHECK(sq.is_boundary());
    CHECK(realize_jet(sq, 4) == LaurentJet::monomial(1, 2, 4));

    CHECK(realize_jet(make_boundary_plot(2, Jet1::constant(1, 0)), 6) == LaurentJet::monomial(1, 4, 6));

    const LaurentJet p = realize_jet(make_boundary_plot(1, Jet1(std::vector<Rational>{1, 1})), 4);
    CHECK(p == LaurentJet(2, {1, 1, 0}));

    CHECK_THROWS_WITH_AS(make_boundary_plot(0, Jet1::constant(1, 0)), "not certified nonnegative", Error);
    CHECK_THROWS_WITH_AS(make_boundary_plot(1, Jet1::constant(-1, 0)), "not certified nonnegative", Error);
    CHECK_THROWS_WITH_AS(make_boundary_plot(1, Jet1::constant(0, 2)), "not certified nonnegative", Error);
}

TEST_CASE("realize_jet")
{
    const PlotGerm interior = make_interior_plot(1, Jet1(std::vector<Rational>{1, 1}));
    CHECK(realize_jet(interior, 2) == LaurentJet(0, {1, 1, 0}));
    CHECK(realize_jet(interior, 2).valuation() == 0);

    CHECK_THROWS_WITH_AS(realize_jet(PlotGerm::flat(), 4), "flat germ has no finite jet representation", Error);
    CHECK_THROWS_AS(realize_jet(make_boundary_plot(3, Jet1::constant(1, 0)), 4), TruncationError);
}

TEST_CASE("interior germ invariants")
{
    CHECK_THROWS_AS(make_interior_plot(0, Jet1::constant(0, 1)), Error);
    CHECK_THROWS_AS(make_interior_plot(2, Jet1::constant(1, 1)), Error);
}

TEST_CASE("boundary germs realize to t^(2m) * unit with positive leading coefficient")
{
    Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = gen.integer(1, 5);
        const Jet1 u = gen.unit(gen.integer(0, 6));
        const int order = 2 * m + gen.integer(0, 8);
        const LaurentJet p = realize_jet(make_boundary_plot(m, u), order);
        CHECK(p.valuation() == 2 * m);
        CHECK(p.valuation() % 2 == 0);
        CHECK(p.leading() > 0);
        // t^(2m) * u expanded independently.
        const auto expanded = cornerjet::testing::sparse_mul({{2 * m, 1}}, cornerjet::testing::to_sparse(u.coeffs()));
        for (int d = 0; d <= order; ++d) {
            const auto it = expanded.find(d);
            CHECK(p.coeff(d) == (it == expanded.end() ? Rational(0) : it->second));
        }
    }
}
