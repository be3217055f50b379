#include "cornerjet/decompose.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cornerjet;
using cornerjet::testing::Gen;

namespace {

HalfLineTensor dx2(LaurentJet coeff) { return {2, std::move(coeff)}; }

Jet1 jet(std::vector<Rational> c) { return Jet1(std::move(c)); }

} // namespace

TEST_CASE("decompose_halfline: worked examples")
{
    const Decomposition sing = decompose_halfline(tau_sing());
    CHECK(sing.c == 1);
    CHECK(sing.regular.is_zero());
    CHECK(sing.regular.order() == kDefaultOrder);

    const Decomposition mixed = decompose_halfline(dx2(LaurentJet(-1, {1, 3, 1, 0})));
    CHECK(mixed.c == 1);
    CHECK(mixed.regular == jet({3, 1, 0}));
    // h(x) = 4 + 12x + 4x^2, g(t) = h(t^2)
    CHECK(mixed.trace.h == jet({4, 12, 4, 0}));
    CHECK(mixed.trace.g == jet({4, 0, 12, 0, 4, 0, 0}));

    const Decomposition plain = decompose_halfline(dx2(LaurentJet(1, {1, 0})));
    CHECK(plain.c == 0);
    CHECK(plain.regular == jet({0, 1, 0}));
}

TEST_CASE("decompose_halfline: rejections")
{
    try {
        decompose_halfline(dx2(LaurentJet::monomial(1, -2, 4)));
        FAIL("expected rejection");
    } catch (const NotSmoothError& e) {
        CHECK(std::string(e.what()) == "not a smooth tensor on Δ: capacity exceeded");
        CHECK(e.witness().status == Smoothness::pole);
        CHECK(e.witness().witness->valuation() == -2);
    }
    CHECK_THROWS_AS(decompose_halfline(HalfLineTensor(1, LaurentJet::monomial(1, 0, 4))), std::invalid_argument);
}

TEST_CASE("decompose_halfline: zero coefficient uses the requested order")
{
    const Decomposition z = decompose_halfline(dx2(LaurentJet{}), 5);
    CHECK(z.c == 0);
    CHECK(z.regular.order() == 5);
    CHECK(z.regular.is_zero());
}

TEST_CASE("round trip c/x + r and agreement with the valuation split")
{
    Gen gen(41);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational c = gen.rational(100);
        const Jet1 r = gen.jet1(kDefaultOrder);
        const LaurentJet f = LaurentJet::monomial(c, -1, kDefaultOrder) + LaurentJet::from_jet(r);
        const Decomposition d = decompose_halfline(dx2(f));
        CHECK(d.c == c);
        CHECK(d.regular == r);
        CHECK(d.reconstruct() == f);

        const auto [oracle_c, oracle_r] = cornerjet::testing::valuation_split(f, kDefaultOrder);
        CHECK(d.c == oracle_c);
        CHECK(d.regular == oracle_r);
    }
}

TEST_CASE("pole-free tensors have no singular part")
{
    Gen gen(42);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentJet f = gen.laurent(gen.integer(0, 3), gen.integer(1, 10));
        CHECK(decompose_halfline(dx2(f)).c == 0);
    }
}

TEST_CASE("decompose_quadrant: worked examples")
{
    const int n = 6;
    const QuadrantTensor t(LaurentJet2::monomial(1, -1, 2, n), LaurentJet2::monomial(1, 0, -1, n),
                           LaurentJet2::monomial(1, 1, 1, n));
    const QuadrantDecomposition d = decompose_quadrant(t);
    CHECK(d.A == Jet1::monomial(1, 2, n + 1));
    CHECK(d.B == Jet1::constant(1, n + 1));
    CHECK(d.regular_xx.is_zero());
    CHECK(d.regular_yy.is_zero());
    Jet2 xy(n);
    xy.set(1, 1, 1);
    CHECK(d.regular_xy == xy);
    CHECK(d.parity.holds());
    CHECK(d.reconstruct() == t);

    const QuadrantDecomposition e =
        decompose_quadrant({LaurentJet2::monomial(1, 0, 0, n), LaurentJet2::monomial(1, 0, 0, n), LaurentJet2(n)});
    CHECK(e.A.is_zero());
    CHECK(e.B.is_zero());
    Jet2 one(n);
    one.set(0, 0, 1);
    CHECK(e.regular_xx == one);
    CHECK(e.regular_yy == e.regular_xx);
    CHECK(e.regular_xy.is_zero());

    try {
        decompose_quadrant({LaurentJet2(n), LaurentJet2(n), LaurentJet2::monomial(1, -1, 0, n)});
        FAIL("expected rejection");
    } catch (const QuadrantSmoothnessError& err) {
        CHECK(err.kind() == QuadrantSmoothnessError::Kind::singular_cross_term);
        CHECK(std::string(err.what()).starts_with("singular cross term: violates odd-odd parity"));
        CHECK(err.report().dudv.negative_valuation);
        CHECK_FALSE(err.report().dudv.holds);
        CHECK(err.report().dudv.sector(ParitySector::odd_odd).min_exponents == std::pair{-1, 1});
    }
}

TEST_CASE("decompose_quadrant: axial rejections")
{
    const int n = 6;
    const auto kind_of = [](const QuadrantTensor& t) {
        try {
            decompose_quadrant(t);
        } catch (const QuadrantSmoothnessError& e) {
            CHECK(std::string(e.what()).starts_with("not a smooth tensor on C₂"));
            return e.kind();
        }
        FAIL("expected rejection");
        return QuadrantSmoothnessError::Kind::singular_cross_term;
    };
    // pole of order 2 in a
    CHECK(kind_of({LaurentJet2::monomial(1, -2, 0, n), LaurentJet2(n), LaurentJet2(n)}) ==
          QuadrantSmoothnessError::Kind::not_smooth);
    // pole of a in y
    CHECK(kind_of({LaurentJet2::monomial(1, 0, -1, n), LaurentJet2(n), LaurentJet2(n)}) ==
          QuadrantSmoothnessError::Kind::not_smooth);
    // pole of b in x
    CHECK(kind_of({LaurentJet2(n), LaurentJet2::monomial(1, -1, 0, n), LaurentJet2(n)}) ==
          QuadrantSmoothnessError::Kind::not_smooth);
}

TEST_CASE("check_gamma_parity: worked examples")
{
    const int n = 4;
    const ParityReport euclid =
        check_gamma_parity({LaurentJet2::monomial(1, 0, 0, n), LaurentJet2::monomial(1, 0, 0, n), LaurentJet2(n)});
    CHECK(euclid.holds());
    CHECK(euclid.du2.sector(ParitySector::even_even).terms == 1);
    CHECK(euclid.dv2.sector(ParitySector::even_even).terms == 1);
    CHECK_FALSE(euclid.dudv.sector(ParitySector::odd_odd).occupied());

    const ParityReport xy = check_gamma_parity({LaurentJet2(n), LaurentJet2(n), LaurentJet2::monomial(1, 1, 1, n)});
    CHECK(xy.holds());
    const SectorOccupancy& oo = xy.dudv.sector(ParitySector::odd_odd);
    CHECK(oo.terms == 1);
    CHECK(oo.mass == 8);
    CHECK(oo.min_exponents == std::pair{3, 3});
    for (ParitySector s : {ParitySector::even_even, ParitySector::even_odd, ParitySector::odd_even}) {
        CHECK_FALSE(xy.dudv.sector(s).occupied());
    }

    const ParityReport bad = check_gamma_parity({LaurentJet2(n), LaurentJet2(n), LaurentJet2::monomial(1, -1, 0, n)});
    CHECK_FALSE(bad.holds());
    CHECK(bad.dudv.negative_valuation);
}

TEST_CASE("quadrant round trip from random parts")
{
    Gen gen(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = gen.integer(1, 6);
        const Jet1 A = gen.jet1(n + 1);
        const Jet1 B = gen.jet1(n + 1);
        const Jet2 rxx = gen.jet2(n);
        const Jet2 ryy = gen.jet2(n);
        const Jet2 rxy = gen.jet2(n);
        LaurentJet2::Terms a_sing, b_sing;
        for (int j = 0; j <= n + 1; ++j) {
            a_sing[{-1, j}] = A[j];
            b_sing[{j, -1}] = B[j];
        }
        const QuadrantTensor tau(LaurentJet2(a_sing, n) + LaurentJet2::from_jet(rxx),
                                 LaurentJet2(b_sing, n) + LaurentJet2::from_jet(ryy), LaurentJet2::from_jet(rxy));
        const QuadrantDecomposition d = decompose_quadrant(tau);
        CHECK(d.A == A);
        CHECK(d.B == B);
        CHECK(d.regular_xx == rxx);
        CHECK(d.regular_yy == ryy);
        CHECK(d.regular_xy == rxy);
        CHECK(d.reconstruct() == tau);
    }
}

TEST_CASE("cross poles are always rejected, accepted cross parts are regular")
{
    Gen gen(44);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5;
        QuadrantTensor base = gen.pole_free_quadrant(n);
        const int pu = -gen.integer(0, 2);
        const int pv = pu == 0 ? -gen.integer(1, 2) : -gen.integer(0, 2);
        const LaurentJet2 c = base.c() + LaurentJet2::monomial(gen.nonzero_rational(), pu, pv, n);
        CHECK_THROWS_AS(decompose_quadrant({base.a(), base.b(), c}), QuadrantSmoothnessError);

        const QuadrantDecomposition ok = decompose_quadrant(base);
        const LaurentJet2 cross = LaurentJet2::from_jet(ok.regular_xy);
        if (!cross.is_zero()) {
            CHECK(cross.valuations().first >= 0);
            CHECK(cross.valuations().second >= 0);
        }
    }
}
