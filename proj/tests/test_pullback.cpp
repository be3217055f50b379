#include "cornerjet/capacity.hpp"
#include "cornerjet/pullback.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cornerjet;
using cornerjet::testing::Gen;
using cornerjet::testing::SparsePoly;

namespace {

const PlotGerm& sq()
{
    static const PlotGerm p = make_boundary_plot(1, Jet1::constant(1, 0));
    return p;
}

PlotGerm t_pow(int two_m) { return make_boundary_plot(two_m / 2, Jet1::constant(1, 0)); }

HalfLineTensor monomial_tensor(int k, long c, int degree) { return {k, LaurentJet::monomial(c, degree, kDefaultOrder)}; }

/// c x^-p pulled back by t^(2m): c (2m)^k t^(k(2m-1) - 2mp), by hand.
std::pair<Rational, int> symbolic_monomial_pullback(long c, int p, int k, int m)
{
    Rational coeff = c;
    for (int i = 0; i < k; ++i) {
        coeff *= 2 * m;
    }
    return {coeff, k * (2 * m - 1) - 2 * m * p};
}

} // namespace

TEST_CASE("pullback_halfline: worked examples")
{
    const SmoothnessVerdict a = pullback_halfline(tau_sing(), sq(), 4);
    CHECK(a.status == Smoothness::smooth);
    CHECK(*a.witness == LaurentJet::monomial(4, 0, 4));

    const auto [c16, v16] = symbolic_monomial_pullback(1, 1, 2, 2);
    CHECK(c16 == 16);
    CHECK(v16 == 2);
    const SmoothnessVerdict b = pullback_halfline(tau_sing(), t_pow(4), 6);
    CHECK(b.status == Smoothness::smooth);
    CHECK(*b.witness == LaurentJet::monomial(16, 2, 6));

    const SmoothnessVerdict c = pullback_halfline(monomial_tensor(2, 1, -2), sq(), 4);
    CHECK(c.status == Smoothness::pole);
    CHECK(c.pole_order == 2);
    CHECK(c.witness->valuation() == -2);
    CHECK(c.witness->leading() == 4);
    CHECK(describe(c) == "Pole(2)");

    const SmoothnessVerdict d = pullback_halfline(monomial_tensor(3, 1, -1), sq(), 4);
    CHECK(d.status == Smoothness::smooth);
    CHECK(*d.witness == LaurentJet::monomial(8, 1, 4));
}

TEST_CASE("pullback_form: worked examples")
{
    const FormPullback dx = pullback_form(monomial_tensor(1, 1, 0), sq(), 4);
    CHECK(dx.verdict.status == Smoothness::smooth);
    CHECK(*dx.verdict.witness == LaurentJet::monomial(2, 1, 4));
    CHECK(dx.vanishing_order == 1);

    const FormPullback xdx = pullback_form(monomial_tensor(1, 1, 1), sq(), 4);
    CHECK(*xdx.verdict.witness == LaurentJet::monomial(2, 3, 4));
    CHECK(xdx.vanishing_order == 3);

    const FormPullback pole = pullback_form(monomial_tensor(1, 1, -1), sq(), 4);
    CHECK(pole.verdict.status == Smoothness::pole);
    CHECK(pole.verdict.pole_order == 1);
    CHECK(pole.verdict.witness->leading() == 2);
    CHECK(pole.verdict.witness->valuation() == -1);
    CHECK_FALSE(pole.vanishing_order);
    CHECK(capacity(1) == 0);

    CHECK_THROWS_AS(pullback_form(tau_sing(), sq(), 4), std::invalid_argument);
}

TEST_CASE("pullback_halfline: flat germs use the capacity rule")
{
    CHECK(pullback_halfline(tau_sing(), PlotGerm::flat(), 4).status == Smoothness::flat_smooth);
    CHECK(pullback_halfline(monomial_tensor(2, 1, -2), PlotGerm::flat(), 4).status == Smoothness::flat_indeterminate);
    CHECK(pullback_halfline(monomial_tensor(4, 1, -2), PlotGerm::flat(), 4).status == Smoothness::flat_smooth);
    CHECK_FALSE(pullback_halfline(tau_sing(), PlotGerm::flat(), 4).witness);
}

TEST_CASE("pullback_halfline: truncation errors are never silent")
{
    CHECK_THROWS_AS(pullback_halfline(monomial_tensor(2, 1, 3), sq(), 4), TruncationError);
    CHECK_NOTHROW(pullback_halfline(monomial_tensor(2, 1, 3), sq(), 8));
    CHECK_THROWS_AS(pullback_halfline(tau_sing(), sq(), 1), std::invalid_argument);
}

TEST_CASE("pullback_halfline: zero tensor pulls back to zero")
{
    const SmoothnessVerdict v = pullback_halfline(HalfLineTensor(2, LaurentJet{}), sq(), 4);
    CHECK(v.status == Smoothness::smooth);
    CHECK(v.witness->is_zero());
}

TEST_CASE("valuation law k(2m-1) - 2mp with random units")
{
    Gen gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = gen.integer(0, 8);
        const int p = gen.integer(0, 5);
        const int m = gen.integer(1, 6);
        const HalfLineTensor tau(k, gen.laurent(-p, gen.integer(1, 8)));
        const PlotGerm plot = make_boundary_plot(m, gen.unit(gen.integer(0, 4)));
        const int expected = k * (2 * m - 1) - 2 * m * p;
        const SmoothnessVerdict v = pullback_halfline(tau, plot, std::max(2, expected + 3));
        REQUIRE(v.witness);
        CHECK(v.witness->valuation() == expected);
        CHECK((v.status == Smoothness::smooth) == (expected >= 0));
        if (expected < 0) {
            CHECK(v.pole_order == -expected);
        }
    }
}

TEST_CASE("smoothness does not depend on the unit")
{
    Gen gen(32);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = gen.integer(0, 6);
        const int m = gen.integer(1, 4);
        const HalfLineTensor tau(k, gen.laurent(-gen.integer(0, 3), 6));
        const SmoothnessVerdict a = pullback_halfline(tau, make_boundary_plot(m, gen.unit(3)), 60);
        const SmoothnessVerdict b = pullback_halfline(tau, make_boundary_plot(m, gen.unit(3)), 60);
        CHECK(a.status == b.status);
        CHECK(a.witness->valuation() == b.witness->valuation());
    }
}

TEST_CASE("boundary witness matches a polynomial expansion once the pole is cleared")
{
    // witness * P^p = (x^p c)(P) * P'^k, and the right-hand side is a polynomial.
    Gen gen(33);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = gen.integer(0, 4);
        const int p = gen.integer(0, 2);
        const int m = gen.integer(1, 3);
        const int order = 12;
        const LaurentJet coeff = gen.laurent(-p, order + p + 1);
        const Jet1 unit = gen.unit(gen.integer(0, 3));
        const PlotGerm plot = make_boundary_plot(m, unit);
        const int valuation = k * (2 * m - 1) - 2 * m * p;
        if (valuation > order) {
            continue;
        }
        const LaurentJet w = *pullback_halfline(HalfLineTensor(k, coeff), plot, order).witness;

        SparsePoly poly_p = cornerjet::testing::sparse_mul({{2 * m, 1}}, cornerjet::testing::to_sparse(unit.coeffs()));
        SparsePoly dp;
        for (const auto& [d, c] : poly_p) {
            dp[d - 1] += c * d;
        }
        SparsePoly rhs;
        for (int d = coeff.valuation(); d <= coeff.top_degree(); ++d) {
            for (const auto& [e, c] : cornerjet::testing::sparse_pow(poly_p, static_cast<unsigned>(d + p))) {
                rhs[e] += coeff.coeff(d) * c;
            }
        }
        rhs = cornerjet::testing::sparse_mul(rhs, cornerjet::testing::sparse_pow(dp, static_cast<unsigned>(k)));

        const LaurentJet lhs = w * realize_jet(plot, 2 * m + order).pow(p);
        for (int d = lhs.valuation(); d <= lhs.top_degree(); ++d) {
            const auto it = rhs.find(d);
            CHECK(lhs.coeff(d) == (it == rhs.end() ? Rational(0) : it->second));
        }
    }
}

TEST_CASE("interior germs always pull back smoothly")
{
    Gen gen(34);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational x0 = make_rational(gen.integer(1, 9), gen.integer(1, 4));
        Jet1 jet = gen.jet1(gen.integer(1, 4));
        jet.set(0, x0);
        const HalfLineTensor tau(gen.integer(0, 5), gen.laurent(-gen.integer(0, 4), 6));
        const SmoothnessVerdict v = pullback_halfline(tau, make_interior_plot(x0, jet), 6);
        CHECK(v.status == Smoothness::smooth);
    }
}

TEST_CASE("interior witness matches direct expansion for polynomial coefficients")
{
    // (1 + x) dx^2 along 1/2 + t: (3/2 + t) * 1.
    const HalfLineTensor g(2, LaurentJet(0, {1, 1, 0, 0}));
    const PlotGerm p = make_interior_plot(make_rational(1, 2), Jet1(std::vector<Rational>{make_rational(1, 2), 1}));
    const SmoothnessVerdict v = pullback_halfline(g, p, 3);
    CHECK(*v.witness == LaurentJet(0, {make_rational(3, 2), 1, 0, 0}));

    // x^-1 dx along 2 + t: 1/(2 + t) = 1/2 - t/4 + t^2/8 - ...
    const SmoothnessVerdict s = pullback_halfline(tau_sing(), make_interior_plot(2, Jet1(std::vector<Rational>{2, 1})), 3);
    CHECK(*s.witness == LaurentJet(0, {make_rational(1, 2), make_rational(-1, 4), make_rational(1, 8), make_rational(-1, 16)}));
}

TEST_CASE("pullback_sq2: worked examples")
{
    const int n = 6;
    const Sq2Pullback a = pullback_sq2({LaurentJet2::monomial(1, -1, 0, n), LaurentJet2(n), LaurentJet2(n)});
    CHECK(a.du2.terms() == LaurentJet2::Terms{{{0, 0}, 4}});
    CHECK(a.dv2.is_zero());
    CHECK(a.dudv.is_zero());

    const Sq2Pullback b =
        pullback_sq2({LaurentJet2::monomial(1, 0, 0, n), LaurentJet2::monomial(1, 0, 0, n), LaurentJet2(n)});
    CHECK(b.du2.terms() == LaurentJet2::Terms{{{2, 0}, 4}});
    CHECK(b.dv2.terms() == LaurentJet2::Terms{{{0, 2}, 4}});
    CHECK(b.dudv.is_zero());
    CHECK(b.du2.order() == 2 * n + 2);

    const Sq2Pullback c = pullback_sq2({LaurentJet2(n), LaurentJet2(n), LaurentJet2::monomial(1, -1, 0, n)});
    CHECK(c.dudv.terms() == LaurentJet2::Terms{{{-1, 1}, 8}});
    CHECK(c.dudv.valuations().first == -1);
}

TEST_CASE("pullback_sq2: order cap")
{
    const QuadrantTensor t{LaurentJet2::monomial(1, 2, 2, 6), LaurentJet2(6), LaurentJet2(6)};
    CHECK_THROWS_AS(pullback_sq2(t, 4), TruncationError);
    CHECK(pullback_sq2(t, 10).du2.order() == 10);
    CHECK_THROWS_AS(pullback_sq2(t, 1), std::invalid_argument);
}

TEST_CASE("pullback_sq2 of pole-free tensors obeys the sign-change selection rule")
{
    Gen gen(35);
    for (int trial = 0; trial < 50; ++trial) {
        const Sq2Pullback pb = pullback_sq2(gen.pole_free_quadrant(gen.integer(0, 5)));
        const auto du2 = parity_decompose2(pb.du2.to_jet(pb.du2.order()));
        const auto dv2 = parity_decompose2(pb.dv2.to_jet(pb.dv2.order()));
        const auto dudv = parity_decompose2(pb.dudv.to_jet(pb.dudv.order()));
        CHECK((du2.even_odd + du2.odd_even + du2.odd_odd).is_zero());
        CHECK((dv2.even_odd + dv2.odd_even + dv2.odd_odd).is_zero());
        CHECK((dudv.even_even + dudv.even_odd + dudv.odd_even).is_zero());
    }
}

TEST_CASE("pullback_path2 along component pairs")
{
    const int n = 8;
    // y^2/x dx^2 along (t^2, 1 + t): (1 + t)^2 / t^2 * (2t)^2 = 4 (1 + t)^2.
    const QuadrantTensor tau{LaurentJet2::monomial(1, -1, 2, n), LaurentJet2(n), LaurentJet2(n)};
    const QuadrantPlotGerm path =
        QuadrantPlotGerm::pair(make_boundary_plot(1, Jet1::constant(1, 0)), make_interior_plot(1, Jet1(std::vector<Rational>{1, 1})));
    const SmoothnessVerdict v = pullback_path2(tau, path, 4);
    CHECK(v.status == Smoothness::smooth);
    CHECK(*v.witness == LaurentJet(0, {4, 8, 4, 0, 0}));

    // A cross pole x^-1 dxdy along (t^2, t^2): 2 * t^-2 * 2t * 2t = 8.
    const QuadrantTensor cross{LaurentJet2(n), LaurentJet2(n), LaurentJet2::monomial(1, -1, 0, n)};
    const PlotGerm t2 = make_boundary_plot(1, Jet1::constant(1, 0));
    CHECK(pullback_path2(cross, QuadrantPlotGerm::pair(t2, t2), 4).witness->coeff(0) == 8);
    // ... but along (t^2, 1 + t) it blows up: 2 t^-2 * 2t * 1.
    const SmoothnessVerdict pole = pullback_path2(
        cross, QuadrantPlotGerm::pair(t2, make_interior_plot(1, Jet1(std::vector<Rational>{1, 1}))), 4);
    CHECK(pole.status == Smoothness::pole);
    CHECK(pole.pole_order == 1);

    CHECK_THROWS_AS(pullback_path2(tau, QuadrantPlotGerm::sq(), 4), std::invalid_argument);
}
