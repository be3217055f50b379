#pragma once

#include <vector>

namespace cornerjet {

/// Largest pole order p such that x^-p dx^k pulls back smoothly along every plot: floor(k/2).
int capacity(int k);

/**
 * Margins k(2m - 1) - 2mp of a pole of order p against boundary plots t^(2m), m = 1..m_max.
 *
 * Each margin is the valuation of the pullback of x^-p dx^k along t^(2m); the report keeps both the
 * formula and the jet-computed valuation so they can be compared.
 */
struct CapacityReport
{
    int k = 0;
    int p = 0;
    std::vector<long> margins;              ///< index m - 1
    std::vector<long> pullback_valuations;  ///< from the pullback engine, same indexing
    bool admissible = false;                ///< every margin >= 0
    int binding_m = 1;                      ///< smallest m attaining the minimum margin

    friend bool operator==(const CapacityReport&, const CapacityReport&) = default;
};

inline constexpr int kDefaultMaxContact = 6;

/// Throws std::logic_error if the formula and the pullback valuations ever disagree.
CapacityReport verify_capacity(int k, int p, int m_max = kDefaultMaxContact);

struct CapacityEntry
{
    int k;
    int capacity;

    friend bool operator==(const CapacityEntry&, const CapacityEntry&) = default;
};

/// (k, largest admissible p) for k = 0..k_max, found by scanning verify_capacity over p = 0..k + 1.
std::vector<CapacityEntry> capacity_table(int k_max, int m_max = kDefaultMaxContact);

} // namespace cornerjet
