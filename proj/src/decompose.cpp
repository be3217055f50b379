#include "cornerjet/decompose.hpp"

#include <stdexcept>
#include <string>

namespace cornerjet {

Decomposition decompose_halfline(const HalfLineTensor& tau, int order)
{
    if (tau.degree() != 2) {
        throw std::invalid_argument("decomposition needs a symmetric 2-tensor, got degree " +
                                    std::to_string(tau.degree()));
    }
    const LaurentJet& f = tau.coeff();
    if (f.pole_order() >= 2) {
        const int witness_order = std::max(2, 2 * f.valuation() + 2);
        throw NotSmoothError("not a smooth tensor on Δ: capacity exceeded",
                             pullback_halfline(tau, make_boundary_plot(1, Jet1::constant(1, 0)), witness_order));
    }
    const int top = f.is_zero() ? order : f.top_degree();
    if (top < 0) {
        throw TruncationError("coefficient known only through degree " + std::to_string(top));
    }

    const Jet1 g = (f.substitute_power(2).shifted(2) * Rational(4)).to_jet(2 * top + 2);
    const Jet1 h = whitney_descend(g);

    Jet1 k(h.order() - 1);
    for (int i = 0; i <= k.order(); ++i) {
        k.set(i, h[i + 1]);
    }
    return {h[0] / 4, k * Rational(1, 4), {g, h}};
}

namespace {

ComponentParity component_parity(const LaurentJet2& comp, ParitySector allowed)
{
    ComponentParity cp;
    cp.allowed = allowed;
    const auto parts = parity_decompose2(comp);
    const LaurentJet2* by_sector[] = {&parts.even_even, &parts.even_odd, &parts.odd_even, &parts.odd_odd};
    for (std::size_t s = 0; s < 4; ++s) {
        SectorOccupancy& occ = cp.sectors[s];
        occ.terms = by_sector[s]->terms().size();
        for (const auto& [e, c] : by_sector[s]->terms()) {
            occ.mass += abs(c);
        }
        occ.min_exponents = by_sector[s]->valuations();
        if (occ.occupied() && static_cast<ParitySector>(s) != allowed) {
            cp.holds = false;
        }
    }
    const auto [vu, vv] = comp.valuations();
    cp.negative_valuation = vu < 0 || vv < 0;
    if (cp.negative_valuation) {
        cp.holds = false;
    }
    return cp;
}

ParityReport parity_of(const Sq2Pullback& pb)
{
    return {component_parity(pb.du2, ParitySector::even_even), component_parity(pb.dv2, ParitySector::even_even),
            component_parity(pb.dudv, ParitySector::odd_odd)};
}

std::string exponents(std::pair<int, int> e)
{
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

} // namespace

ParityReport check_gamma_parity(const QuadrantTensor& tau) { return parity_of(pullback_sq2(tau)); }

QuadrantDecomposition decompose_quadrant(const QuadrantTensor& tau)
{
    const Sq2Pullback pb = pullback_sq2(tau);
    ParityReport report = parity_of(pb);
    using Kind = QuadrantSmoothnessError::Kind;

    if (report.dudv.negative_valuation) {
        throw QuadrantSmoothnessError(Kind::singular_cross_term,
                                      "singular cross term: violates odd-odd parity; du dv coefficient has exponents " +
                                          exponents(pb.dudv.valuations()),
                                      std::move(report));
    }
    if (report.du2.negative_valuation) {
        throw QuadrantSmoothnessError(Kind::not_smooth,
                                      "not a smooth tensor on C₂: du^2 coefficient has exponents " +
                                          exponents(pb.du2.valuations()),
                                      std::move(report));
    }
    if (report.dv2.negative_valuation) {
        throw QuadrantSmoothnessError(Kind::not_smooth,
                                      "not a smooth tensor on C₂: dv^2 coefficient has exponents " +
                                          exponents(pb.dv2.valuations()),
                                      std::move(report));
    }

    // Axial terms: even-even descent, then split off the x = 0 (resp. y = 0) slice.
    const Jet2 k_alpha = whitney_descend2(pb.du2.to_jet(pb.du2.order()));
    const Jet2 k_beta = whitney_descend2(pb.dv2.to_jet(pb.dv2.order()));
    Jet1 a_sing(k_alpha.order());
    Jet1 b_sing(k_beta.order());
    for (int j = 0; j <= k_alpha.order(); ++j) {
        a_sing.set(j, k_alpha.coeff(0, j) / 4);
    }
    for (int i = 0; i <= k_beta.order(); ++i) {
        b_sing.set(i, k_beta.coeff(i, 0) / 4);
    }
    Jet2 q_alpha(k_alpha.order() - 1);
    Jet2 q_beta(k_beta.order() - 1);
    for (int d = 0; d <= q_alpha.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            q_alpha.set(d - j, j, k_alpha.coeff(d - j + 1, j) / 4);
        }
    }
    for (int d = 0; d <= q_beta.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            q_beta.set(d - j, j, k_beta.coeff(d - j, j + 1) / 4);
        }
    }

    // Cross term: 4 u v c(u^2, v^2) = u v K(u^2, v^2), so c = K / 4.
    const LaurentJet2 gamma_tilde = pb.dudv * Rational(1, 2);
    Jet2 cross = odd_odd_descend2(gamma_tilde.to_jet(gamma_tilde.order()));
    cross *= Rational(1, 4);

    return {a_sing, b_sing, q_alpha, q_beta, cross, std::move(report)};
}

} // namespace cornerjet
