#include "cornerjet/error.hpp"
#include "cornerjet/jets.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace cornerjet;
using cornerjet::testing::Gen;

namespace {

Jet1 jet(std::initializer_list<Rational> c) { return Jet1(std::vector<Rational>(c)); }

Rational q(long n, long d = 1) { return make_rational(n, d); }

} // namespace

TEST_CASE("compose: worked examples")
{
    // Linear outer: 1 + t at t^2.
    CHECK(compose(Jet1(std::vector<Rational>{1, 1}).padded(4), Jet1::monomial(1, 2, 4)) == jet({1, 0, 1, 0, 0}));

    // Monomial outer: (2t)^2.
    CHECK(compose(Jet1::monomial(1, 2, 3), Jet1::monomial(2, 1, 3)) == jet({0, 0, 4, 0}));

    // exp jet at t^2, against term-by-term substitution.
    const Jet1 exp3 = jet({1, 1, q(1, 2), q(1, 6)});
    const Jet1 t2 = Jet1::monomial(1, 2, 6);
    const Jet1 expected = jet({1, 0, 1, 0, q(1, 2), 0, q(1, 6)});
    CHECK(cornerjet::testing::substitute_oracle(exp3, t2, 6) == expected);
    CHECK(compose(exp3, t2) == expected);
}

TEST_CASE("compose: order follows the inner jet unless the outer is too short")
{
    CHECK(compose(jet({1, 1}), Jet1::monomial(1, 2, 6)).order() == 3);
    CHECK(compose(jet({1, 1, 1, 1}), Jet1::monomial(1, 1, 5)).order() == 3);
    CHECK(compose(jet({7, 1}), Jet1(5)) == Jet1::constant(7, 5));
}

TEST_CASE("compose: nonzero constant term is rejected")
{
    CHECK_THROWS_WITH_AS(compose(jet({1, 1}), jet({1, 1})), "composition requires vanishing constant term", Error);
}

TEST_CASE("compose agrees with substitution on random jets")
{
    Gen gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = gen.integer(1, 10);
        const Jet1 outer = gen.jet1(order);
        Jet1 inner = gen.jet1(order);
        inner.set(0, 0);
        CHECK(compose(outer, inner) == cornerjet::testing::substitute_oracle(outer, inner, compose(outer, inner).order()));
    }
}

TEST_CASE("differentiate")
{
    CHECK(differentiate(jet({0, 0, 1})) == jet({0, 2}));
    CHECK(differentiate(jet({1, 3, 5})) == jet({3, 10}));
    // sin jet; the coefficient shift i*c_i -> degree i-1 gives the cos jet.
    CHECK(differentiate(jet({0, 1, 0, q(-1, 6), 0, q(1, 120)})) == jet({1, 0, q(-1, 2), 0, q(1, 24)}));
    CHECK_THROWS_WITH_AS(differentiate(jet({5})), "cannot differentiate order-0 jet", Error);
}

TEST_CASE("laurent_divide")
{
    const auto monomial = [](long c, int d, int len) { return LaurentJet::monomial(c, d, d + len - 1); };

    const LaurentJet a = laurent_divide(monomial(4, 2, 3), monomial(1, 2, 3));
    CHECK(a.valuation() == 0);
    CHECK(a == monomial(4, 0, 3));

    const LaurentJet b = laurent_divide(monomial(16, 6, 3), monomial(1, 4, 3));
    CHECK(b.valuation() == 2);
    CHECK(b == monomial(16, 2, 3));

    const LaurentJet c = laurent_divide(monomial(4, 2, 3), monomial(1, 4, 3));
    CHECK(c.valuation() == -2);
    CHECK(c == monomial(4, -2, 3));

    CHECK_THROWS_AS(laurent_divide(monomial(1, 0, 2), LaurentJet{}), Error);
    CHECK(laurent_divide(LaurentJet{}, monomial(3, 1, 2)).is_zero());
}

TEST_CASE("whitney_descend")
{
    CHECK(whitney_descend(jet({0, 0, 4})) == jet({0, 4}));
    CHECK(whitney_descend(jet({0, 0, 2, 0, 1})) == jet({0, 2, 1}));
    try {
        whitney_descend(jet({0, 0, 0, 1}));
        FAIL("expected a parity error");
    } catch (const ParityError& e) {
        CHECK(e.degree() == 3);
        CHECK(std::string(e.what()).find("jet is not even") == 0);
    }
}

TEST_CASE("parity_decompose2")
{
    Jet2 uv2(4);
    uv2.set(2, 2, 1);
    auto p = parity_decompose2(uv2);
    CHECK(p.even_even == uv2);
    CHECK(p.odd_odd.is_zero());
    CHECK(p.even_odd.is_zero());
    CHECK(p.odd_even.is_zero());

    Jet2 uv(4);
    uv.set(1, 1, 1);
    p = parity_decompose2(uv);
    CHECK(p.odd_odd == uv);
    CHECK(p.even_even.is_zero());

    // u^2 + uv + v^3
    Jet2 mixed(4);
    mixed.set(2, 0, 1);
    mixed.set(1, 1, 1);
    mixed.set(0, 3, 1);
    p = parity_decompose2(mixed);
    Jet2 ee(4), oo(4), eo(4);
    ee.set(2, 0, 1);
    oo.set(1, 1, 1);
    eo.set(0, 3, 1);
    CHECK(p.even_even == ee);
    CHECK(p.odd_odd == oo);
    CHECK(p.even_odd == eo);
    CHECK(p.odd_even.is_zero());
}

TEST_CASE("LaurentJet canonical form")
{
    const LaurentJet z(3, {0, 0});
    CHECK(z.is_zero());
    CHECK(z.valuation() == 0);
    CHECK(z == LaurentJet{});

    const LaurentJet j(-2, {0, 5, 1});
    CHECK(j.valuation() == -1);
    CHECK(j.leading() == 5);
    CHECK(j.top_degree() == 0);
    CHECK(j.pole_order() == 1);
    CHECK(j.coeff(-5) == 0);
    CHECK_THROWS_AS(j.coeff(1), TruncationError);
}

TEST_CASE("LaurentJet truncation is relative for products and absolute for sums")
{
    const LaurentJet a(-1, {1, 2, 3});   // known through x^1
    const LaurentJet b(2, {1, 1, 1, 1}); // known through x^5
    CHECK((a + b).top_degree() == 1);
    CHECK((a * b).valuation() == 1);
    CHECK((a * b).length() == 3);
}

TEST_CASE("ring laws hold exactly for random Jet1")
{
    Gen gen(1);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.integer(0, 12);
        const Jet1 a = gen.jet1(n), b = gen.jet1(n), c = gen.jet1(n);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring laws hold exactly for random Jet2")
{
    Gen gen(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen.integer(0, 6);
        const Jet2 a = gen.jet2(n), b = gen.jet2(n), c = gen.jet2(n);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring laws hold exactly for random LaurentJet")
{
    Gen gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int len = gen.integer(1, 10);
        const LaurentJet a = gen.laurent(gen.integer(-3, 3), len);
        const LaurentJet b = gen.laurent(gen.integer(-3, 3), len);
        const LaurentJet c = gen.laurent(gen.integer(-3, 3), len);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("Leibniz rule")
{
    Gen gen(4);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = gen.integer(1, 12);
        const Jet1 a = gen.jet1(n), b = gen.jet1(n);
        CHECK(differentiate(a * b) == differentiate(a) * b + a * differentiate(b));
    }
}

TEST_CASE("laurent_divide inverts multiplication")
{
    Gen gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int len = gen.integer(1, 12);
        const LaurentJet a = gen.laurent(gen.integer(-4, 4), len);
        const LaurentJet b = gen.laurent(gen.integer(-4, 4), len + gen.integer(0, 3));
        CHECK(laurent_divide(a * b, b) == a);
    }
}

TEST_CASE("Whitney descent undoes substitution of t^2")
{
    Gen gen(6);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = gen.integer(0, 10);
        const Jet1 h = gen.jet1(m);
        CHECK(whitney_descend(compose(h, Jet1::monomial(1, 2, 2 * m))) == h);
    }
}

TEST_CASE("parity parts sum to the input with disjoint support")
{
    Gen gen(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Jet2 j = gen.jet2(gen.integer(0, 8));
        const auto p = parity_decompose2(j);
        CHECK(p.even_even + p.even_odd + p.odd_even + p.odd_odd == j);
        const Jet2* parts[] = {&p.even_even, &p.even_odd, &p.odd_even, &p.odd_odd};
        for (int d = 0; d <= j.order(); ++d) {
            for (int y = 0; y <= d; ++y) {
                int nonzero = 0;
                for (const Jet2* part : parts) {
                    nonzero += part->coeff(d - y, y) != 0 ? 1 : 0;
                }
                CHECK(nonzero <= 1);
            }
        }
    }
}

TEST_CASE("two-variable descents")
{
    Jet2 g(6);
    g.set(2, 0, 3);
    g.set(0, 4, -1);
    g.set(2, 2, 5);
    const Jet2 k = whitney_descend2(g);
    CHECK(k.order() == 3);
    CHECK(k.coeff(1, 0) == 3);
    CHECK(k.coeff(0, 2) == -1);
    CHECK(k.coeff(1, 1) == 5);

    g.set(1, 0, 1);
    CHECK_THROWS_AS(whitney_descend2(g), ParityError);

    Jet2 odd(6);
    odd.set(1, 1, 2);
    odd.set(3, 1, 7);
    const Jet2 ko = odd_odd_descend2(odd);
    CHECK(ko.order() == 2);
    CHECK(ko.coeff(0, 0) == 2);
    CHECK(ko.coeff(1, 0) == 7);
}

TEST_CASE("LaurentJet2 keeps no zeros and tight valuations")
{
    LaurentJet2 j(LaurentJet2::Terms{{{-1, 2}, 1}, {{3, -1}, 0}, {{0, 0}, 4}}, 6);
    CHECK(j.terms().size() == 2);
    CHECK(j.valuations() == std::pair{-1, 0});
    const auto sq = j.substitute_squares();
    CHECK(sq.order() == 12);
    CHECK(sq.coeff(-2, 4) == 1);
    CHECK((j - j).is_zero());
}
