#include "cornerjet/numeric.hpp"

#include "cornerjet/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace cornerjet {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    approx_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        approx_.push_back(c.get_d());
    }
}

RationalPolynomial RationalPolynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * static_cast<long>(i));
    }
    return RationalPolynomial(std::move(d));
}

Rational RationalPolynomial::operator()(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

double RationalPolynomial::operator()(double t) const
{
    double acc = 0.0;
    for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        c[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        c[i] += b.coeffs_[i];
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(c));
}

void SampledFunction::validate() const
{
    if (!(a < b)) {
        throw std::invalid_argument("interval needs a < b, got [" + to_string(a) + ", " + to_string(b) + "]");
    }
    if (grid_n < 16) {
        throw std::invalid_argument("grid needs at least 16 cells, got " + std::to_string(grid_n));
    }
}

RationalPolynomial SampledFunction::expanded() const
{
    if (const auto* p = std::get_if<RationalPolynomial>(&representation)) {
        return *p;
    }
    RationalPolynomial sum;
    for (const auto& q : std::get<SumOfSquares>(representation).terms) {
        sum = sum + q * q;
    }
    return sum;
}

namespace {

std::vector<double> grid(double lo, double hi, int n)
{
    std::vector<double> pts(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        pts[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    }
    pts.back() = hi;
    return pts;
}

double sup_abs(const RationalPolynomial& p, const std::vector<double>& pts)
{
    double s = 0.0;
    for (double t : pts) {
        s = std::max(s, std::abs(p(t)));
    }
    return s;
}

void require_nonnegative(const RationalPolynomial& f, const std::vector<double>& pts, double tol)
{
    for (double t : pts) {
        if (f(t) < -tol) {
            throw Error("function not nonnegative on interval (f(" + std::to_string(t) + ") = " +
                        std::to_string(f(t)) + ")");
        }
    }
}

/// sup |f''| on [lo, hi] with at least the density of the base grid.
double window_sup(const RationalPolynomial& f2, double lo, double hi, double base_len, int n,
                  const std::vector<double>& base)
{
    const double ratio = std::clamp((hi - lo) / base_len, 1.0, 64.0);
    const int cells = static_cast<int>(std::ceil(ratio * n));
    return std::max(sup_abs(f2, grid(lo, hi, cells)), sup_abs(f2, base));
}

} // namespace

GlaeserLandauReport glaeser_landau_check(const SampledFunction& f, double tol, CurvatureWindow window)
{
    f.validate();
    const RationalPolynomial p = f.expanded();
    const RationalPolynomial p1 = p.derivative();
    const RationalPolynomial p2 = p1.derivative();
    const double a = f.a.get_d();
    const double b = f.b.get_d();
    const auto pts = grid(a, b, f.grid_n);
    require_nonnegative(p, pts, tol);

    GlaeserLandauReport r;
    r.tol = tol;
    r.window_lo = a;
    r.window_hi = b;
    r.C = sup_abs(p2, pts);
    switch (window.mode) {
    case CurvatureWindow::Mode::interval:
        r.note = "sup |f''| over the interval only; the Taylor step may need a wider window";
        break;
    case CurvatureWindow::Mode::fixed:
        r.window_lo = a - window.margin;
        r.window_hi = b + window.margin;
        r.C = window_sup(p2, r.window_lo, r.window_hi, b - a, f.grid_n, pts);
        r.note = "sup |f''| over the interval widened by a fixed margin";
        break;
    case CurvatureWindow::Mode::taylor_reach: {
        const double slope = sup_abs(p1, pts);
        if (slope > 0.0) {
            const double reach = r.C > 0.0 ? slope / r.C : b - a;
            r.window_lo = a - reach;
            r.window_hi = b + reach;
            r.C = window_sup(p2, r.window_lo, r.window_hi, b - a, f.grid_n, pts);
        }
        r.note = "sup |f''| over the interval widened by max|f'|/C (Taylor reach)";
        break;
    }
    }

    r.max_violation = -std::numeric_limits<double>::infinity();
    for (double t : pts) {
        const double d = p1(t);
        const double violation = d * d - 2.0 * r.C * p(t);
        if (violation > r.max_violation) {
            r.max_violation = violation;
            r.worst_t = t;
        }
    }
    r.pass = r.max_violation <= tol;
    return r;
}

namespace {

double evaluate_coefficient(const LaurentJet& coeff, double x)
{
    double acc = 0.0;
    if (coeff.is_zero()) {
        return acc;
    }
    for (int d = coeff.valuation(); d <= coeff.top_degree(); ++d) {
        const Rational c = coeff.coeff(d);
        if (c != 0) {
            acc += c.get_d() * std::pow(x, d);
        }
    }
    return acc;
}

} // namespace

ProbeReport numeric_pullback_probe(const HalfLineTensor& tau, const SampledFunction& plot, double tol)
{
    plot.validate();
    const RationalPolynomial p = plot.expanded();
    const RationalPolynomial p1 = p.derivative();
    const RationalPolynomial p2 = p1.derivative();
    const double a = plot.a.get_d();
    const double b = plot.b.get_d();
    require_nonnegative(p, grid(a, b, plot.grid_n), tol);

    ProbeReport r;
    std::vector<double> finest;
    for (int level = 0; level < 3; ++level) {
        finest = grid(a, b, plot.grid_n << (2 * level));
        double sup = 0.0;
        std::size_t skipped = 0;
        for (double t : finest) {
            const double x = p(t);
            if (x == 0.0) {
                ++skipped;
                continue;
            }
            const double value = evaluate_coefficient(tau.coeff(), x) * std::pow(p1(t), tau.degree());
            sup = std::max(sup, std::abs(value));
        }
        r.refinement_sups.push_back(sup);
        r.skipped_points = skipped;
    }
    r.sup = r.refinement_sups.back();
    r.sup_second_derivative = sup_abs(p2, finest);

    const auto& s = r.refinement_sups;
    r.bounded = !(s[2] > 2.0 * s[0] + tol && s[1] > s[0] && s[2] > s[1]);

    const LaurentJet& c = tau.coeff();
    const bool simple_pole_only = tau.degree() == 2 && !c.is_zero() && c.valuation() == -1 &&
                                  std::all_of(c.coeffs().begin() + 1, c.coeffs().end(),
                                              [](const Rational& q) { return q == 0; });
    if (simple_pole_only) {
        r.bound = 2.0 * std::abs(c.leading().get_d()) * r.sup_second_derivative;
        r.within_bound = r.sup <= *r.bound + tol;
    }
    return r;
}

} // namespace cornerjet
