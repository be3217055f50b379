#pragma once

#include "cornerjet/jet1.hpp"
#include "cornerjet/jet2.hpp"
#include "cornerjet/laurent_jet.hpp"
#include "cornerjet/laurent_jet2.hpp"
#include "cornerjet/rational.hpp"

#include <array>
#include <cstddef>
#include <utility>

namespace cornerjet {

/// coeff(x) dx^k on the half-line; k = 0 is a function, k = 1 a 1-form.
class HalfLineTensor
{
  public:
    HalfLineTensor(int degree, LaurentJet coeff);

    int degree() const noexcept { return degree_; }
    const LaurentJet& coeff() const noexcept { return coeff_; }
    int pole_order() const noexcept { return coeff_.pole_order(); }

    HalfLineTensor scaled(const Rational& s) const { return {degree_, coeff_ * s}; }

    friend bool operator==(const HalfLineTensor&, const HalfLineTensor&) = default;

  private:
    int degree_;
    LaurentJet coeff_;
};

/// dx^2 / x, with coefficient known through x^order.
HalfLineTensor tau_sing(int order = kDefaultOrder);

/// Throws std::invalid_argument for k < 0.
HalfLineTensor make_halfline_tensor(int k, LaurentJet coeff);

inline constexpr int kDefaultMinValuation = -4;

/**
 * a dx^2 + b dy^2 + c dxdy on the quadrant. The cross coefficient c is the full coefficient of the
 * symmetric product: under (x, y) = (u^2, v^2) it pulls back to 8 u v c(u^2, v^2) du dv.
 */
class QuadrantTensor
{
  public:
    QuadrantTensor(LaurentJet2 a, LaurentJet2 b, LaurentJet2 c);

    const LaurentJet2& a() const noexcept { return a_; }
    const LaurentJet2& b() const noexcept { return b_; }
    const LaurentJet2& c() const noexcept { return c_; }

    /// Smallest component order.
    int order() const noexcept;

    friend bool operator==(const QuadrantTensor&, const QuadrantTensor&) = default;

  private:
    LaurentJet2 a_;
    LaurentJet2 b_;
    LaurentJet2 c_;
};

/// Throws std::invalid_argument when any exponent lies below `min_valuation`.
QuadrantTensor make_quadrant_tensor(LaurentJet2 a, LaurentJet2 b, LaurentJet2 c,
                                    int min_valuation = kDefaultMinValuation);

/// Intermediate jets of the half-line construction: g(t) = 4 t^2 f(t^2) = h(t^2).
struct DecompositionTrace
{
    Jet1 g;
    Jet1 h;

    friend bool operator==(const DecompositionTrace&, const DecompositionTrace&) = default;
};

/// f(x) = c / x + regular(x).
struct Decomposition
{
    Rational c;
    Jet1 regular; ///< known through x^regular.order()
    DecompositionTrace trace;

    /// c x^-1 + regular as a Laurent jet through x^regular.order().
    LaurentJet reconstruct() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class ParitySector
{
    even_even,
    even_odd,
    odd_even,
    odd_odd
};

const char* to_string(ParitySector s) noexcept;

struct SectorOccupancy
{
    std::size_t terms = 0;
    Rational mass = 0; ///< sum of |c| over the sector's terms
    std::pair<int, int> min_exponents{0, 0};

    bool occupied() const noexcept { return terms != 0; }

    friend bool operator==(const SectorOccupancy&, const SectorOccupancy&) = default;
};

/// Occupancy of one pulled-back component and whether it obeys its selection rule.
struct ComponentParity
{
    std::array<SectorOccupancy, 4> sectors; ///< indexed by ParitySector
    ParitySector allowed = ParitySector::even_even;
    bool negative_valuation = false; ///< some exponent < 0: not smooth on the parameter plane
    bool holds = true;

    const SectorOccupancy& sector(ParitySector s) const { return sectors[static_cast<std::size_t>(s)]; }

    friend bool operator==(const ComponentParity&, const ComponentParity&) = default;
};

struct ParityReport
{
    ComponentParity du2;
    ComponentParity dv2;
    ComponentParity dudv;

    bool holds() const noexcept { return du2.holds && dv2.holds && dudv.holds; }

    friend bool operator==(const ParityReport&, const ParityReport&) = default;
};

/// tau = A(y)/x dx^2 + B(x)/y dy^2 + regular.
struct QuadrantDecomposition
{
    Jet1 A; ///< in y
    Jet1 B; ///< in x
    Jet2 regular_xx;
    Jet2 regular_yy;
    Jet2 regular_xy;
    ParityReport parity;

    /// The tensor these parts add up to, at the regular parts' order.
    QuadrantTensor reconstruct() const;

    friend bool operator==(const QuadrantDecomposition&, const QuadrantDecomposition&) = default;
};

} // namespace cornerjet
