#include "cornerjet/tensors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cornerjet {

HalfLineTensor::HalfLineTensor(int degree, LaurentJet coeff) : degree_(degree), coeff_(std::move(coeff))
{
    if (degree < 0) {
        throw std::invalid_argument("tensor degree must be non-negative, got " + std::to_string(degree));
    }
}

HalfLineTensor tau_sing(int order) { return {2, LaurentJet::monomial(1, -1, order)}; }

HalfLineTensor make_halfline_tensor(int k, LaurentJet coeff) { return {k, std::move(coeff)}; }

QuadrantTensor::QuadrantTensor(LaurentJet2 a, LaurentJet2 b, LaurentJet2 c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
}

int QuadrantTensor::order() const noexcept { return std::min({a_.order(), b_.order(), c_.order()}); }

QuadrantTensor make_quadrant_tensor(LaurentJet2 a, LaurentJet2 b, LaurentJet2 c, int min_valuation)
{
    for (const auto* comp : {&a, &b, &c}) {
        const auto [vx, vy] = comp->valuations();
        if (vx < min_valuation || vy < min_valuation) {
            throw std::invalid_argument("valuation (" + std::to_string(vx) + ", " + std::to_string(vy) +
                                        ") below minimum " + std::to_string(min_valuation));
        }
    }
    return {std::move(a), std::move(b), std::move(c)};
}

LaurentJet Decomposition::reconstruct() const
{
    std::vector<Rational> coeffs;
    coeffs.reserve(regular.coeffs().size() + 1);
    coeffs.push_back(c);
    coeffs.insert(coeffs.end(), regular.coeffs().begin(), regular.coeffs().end());
    return LaurentJet(-1, std::move(coeffs));
}

const char* to_string(ParitySector s) noexcept
{
    switch (s) {
    case ParitySector::even_even:
        return "even-even";
    case ParitySector::even_odd:
        return "even-odd";
    case ParitySector::odd_even:
        return "odd-even";
    case ParitySector::odd_odd:
        return "odd-odd";
    }
    return "?";
}

QuadrantTensor QuadrantDecomposition::reconstruct() const
{
    const int n = std::min({regular_xx.order(), regular_yy.order(), regular_xy.order()});
    LaurentJet2::Terms a, b;
    for (int j = 0; j <= A.order(); ++j) {
        a[{-1, j}] += A[j];
    }
    for (int i = 0; i <= B.order(); ++i) {
        b[{i, -1}] += B[i];
    }
    const LaurentJet2 a_sing(std::move(a), n);
    const LaurentJet2 b_sing(std::move(b), n);
    return {a_sing + LaurentJet2::from_jet(regular_xx).truncated(n),
            b_sing + LaurentJet2::from_jet(regular_yy).truncated(n),
            LaurentJet2::from_jet(regular_xy).truncated(n)};
}

} // namespace cornerjet
