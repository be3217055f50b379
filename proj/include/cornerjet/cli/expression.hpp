#pragma once

#include "cornerjet/error.hpp"
#include "cornerjet/plots.hpp"
#include "cornerjet/tensors.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace cornerjet::cli {

enum class Space
{
    halfline,
    quadrant
};

class ParseError : public Error
{
  public:
    ParseError(int line, int column, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

  private:
    int line_;
    int column_;
    std::string message_;
};

using Tensor = std::variant<HalfLineTensor, QuadrantTensor>;

/**
 * Grammar (whitespace-insensitive, explicit `*`):
 *
 *   sum     := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' exponent)?
 *   exponent:= ['-'] int | '{' ['-'] int '}' | '(' ['-'] int ')'
 *   primary := int | symbol | '(' sum ')'
 *
 * Symbols are x and dx on the half-line, x, y, dx, dy on the quadrant. Division is by monomials only.
 * Half-line input must be homogeneous of some degree k in dx; quadrant input of degree 2 in (dx, dy).
 * `dx*dy` sets the stored cross coefficient directly: `c*dx*dy` gives c = c.
 *
 * Coefficients are known through total degree `order`; terms above it are an error, as are exponents of
 * x or y below `min_exponent`.
 */
Tensor parse_tensor(std::string_view text, Space space, int order = kDefaultOrder,
                     int min_exponent = kDefaultMinValuation);

HalfLineTensor parse_halfline(std::string_view text, int order = kDefaultOrder, int min_exponent = kDefaultMinValuation);
QuadrantTensor parse_quadrant(std::string_view text, int order = kDefaultOrder, int min_exponent = kDefaultMinValuation);

/**
 * Path germs in t, given as polynomials:
 *   `t^2`, `t^4*(1+t)`     boundary germ t^(2m) u(t), u(0) > 0
 *   `1 + t`, `1/2 + t^2`   interior germ (positive constant term)
 *   `interior(x0; p)`      interior germ with jet p, p(0) = x0
 *   `flat`                 flat boundary germ
 */
PlotGerm parse_plot(std::string_view text);

/// `sq` or a component pair `(p1, p2)`.
QuadrantPlotGerm parse_quadrant_plot(std::string_view text);

/// Sum of squares written as `p1; p2; ...`, each a polynomial in t.
std::vector<std::vector<Rational>> parse_polynomials(std::string_view text);

/// `3`, `-1/2`.
Rational parse_rational_literal(std::string_view text);

} // namespace cornerjet::cli
