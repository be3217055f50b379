#pragma once

#include "cornerjet/jets.hpp"
#include "cornerjet/plots.hpp"
#include "cornerjet/tensors.hpp"

#include <string>
#include <string_view>

namespace cornerjet::cli {

// Canonical text in the input grammar: terms sorted by (x exponent, y exponent, basis), unit coefficients
// omitted, e.g. `x^-1*dx^2 + 3*dx^2 + x*dx^2`. Truncation orders are not printed.

std::string print(const HalfLineTensor& tau);
std::string print(const QuadrantTensor& tau);
std::string print(const PlotGerm& p);
std::string print(const QuadrantPlotGerm& p);

std::string print_polynomial(const Jet1& j, std::string_view var);
std::string print_polynomial(const Jet2& j, std::string_view x, std::string_view y);
std::string print_polynomial(const LaurentJet& j, std::string_view var);
std::string print_polynomial(const LaurentJet2& j, std::string_view x, std::string_view y);

/// Laurent jet with its remainder, `4*t^-2 + O(t^17)`; an exact zero prints as `0`.
std::string print_series(const LaurentJet& j, std::string_view var);

} // namespace cornerjet::cli
