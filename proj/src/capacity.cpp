#include "cornerjet/capacity.hpp"

#include "cornerjet/pullback.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cornerjet {

int capacity(int k)
{
    if (k < 0) {
        throw std::invalid_argument("tensor degree must be non-negative, got " + std::to_string(k));
    }
    return k / 2;
}

CapacityReport verify_capacity(int k, int p, int m_max)
{
    if (k < 0 || p < 0 || m_max < 1) {
        throw std::invalid_argument("verify_capacity needs k >= 0, p >= 0, m_max >= 1");
    }
    CapacityReport r;
    r.k = k;
    r.p = p;
    const HalfLineTensor tau(k, LaurentJet::monomial(1, -p, kDefaultOrder));
    for (int m = 1; m <= m_max; ++m) {
        const long margin = static_cast<long>(k) * (2 * m - 1) - 2L * m * p;
        const int order = std::max(2, static_cast<int>(margin) + 2);
        const SmoothnessVerdict v = pullback_halfline(tau, make_boundary_plot(m, Jet1::constant(1, 0)), order);
        const long valuation = v.witness->valuation();
        if (valuation != margin) {
            throw std::logic_error("capacity margin " + std::to_string(margin) + " disagrees with pullback valuation " +
                                   std::to_string(valuation) + " at m = " + std::to_string(m));
        }
        r.margins.push_back(margin);
        r.pullback_valuations.push_back(valuation);
    }
    const auto lowest = std::min_element(r.margins.begin(), r.margins.end());
    r.admissible = *lowest >= 0;
    r.binding_m = static_cast<int>(lowest - r.margins.begin()) + 1;
    return r;
}

std::vector<CapacityEntry> capacity_table(int k_max, int m_max)
{
    if (k_max < 0) {
        throw std::invalid_argument("k_max must be non-negative");
    }
    std::vector<CapacityEntry> table;
    for (int k = 0; k <= k_max; ++k) {
        int frontier = -1;
        for (int p = 0; p <= k + 1; ++p) {
            if (verify_capacity(k, p, m_max).admissible) {
                frontier = std::max(frontier, p);
            }
        }
        table.push_back({k, frontier});
    }
    return table;
}

} // namespace cornerjet
