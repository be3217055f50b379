#include "cornerjet/cli/app.hpp"

#include "cornerjet/cli/expression.hpp"
#include "cornerjet/cli/json_io.hpp"
#include "cornerjet/cli/printer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace cornerjet::cli {

namespace {

constexpr const char* kTensorHelp =
    "Tensor expression, e.g. \"(1/x + 3)*dx^2\" or \"(y^2/x)*dx^2 + (1/y)*dy^2 + x*y*dx*dy\". Integer and "
    "fraction literals only, explicit '*', powers with '^' (x^-1 allowed). In quadrant expressions c*dx*dy "
    "sets the stored cross coefficient to c; it is not halved. Put expressions that start with '-' after --.";

struct Output
{
    bool json = false;
    std::ostringstream text;
    Json doc = Json::object();
};

std::string number(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << (v == 0.0 ? 0.0 : v);
    return s.str();
}

std::string print_regular(const QuadrantDecomposition& d)
{
    const QuadrantTensor reg(LaurentJet2::from_jet(d.regular_xx), LaurentJet2::from_jet(d.regular_yy),
                             LaurentJet2::from_jet(d.regular_xy));
    if (reg.a().is_zero() && reg.b().is_zero() && reg.c().is_zero()) {
        return "0";
    }
    return print(reg);
}

std::string occupied_sectors(const ComponentParity& c)
{
    std::string out;
    for (int s = 0; s < 4; ++s) {
        const SectorOccupancy& o = c.sectors[static_cast<std::size_t>(s)];
        if (!o.occupied()) {
            continue;
        }
        if (!out.empty()) {
            out += ", ";
        }
        out += std::string(to_string(static_cast<ParitySector>(s))) + " (terms " + std::to_string(o.terms) + ", min exponents (" +
               std::to_string(o.min_exponents.first) + ", " + std::to_string(o.min_exponents.second) + "))";
    }
    return out.empty() ? "none" : out;
}

void print_parity(std::ostream& out, const ParityReport& r)
{
    const std::pair<const char*, const ComponentParity*> rows[] = {
        {"du^2", &r.du2}, {"dv^2", &r.dv2}, {"du*dv", &r.dudv}};
    for (const auto& [name, c] : rows) {
        out << name << ": allowed " << to_string(c->allowed) << "; occupied " << occupied_sectors(*c) << "; "
            << (c->holds ? "holds" : c->negative_valuation ? "violated (negative exponent)" : "violated") << '\n';
    }
    out << "selection rule " << (r.holds() ? "holds" : "violated") << '\n';
}

int exit_for(Smoothness s)
{
    return s == Smoothness::smooth || s == Smoothness::flat_smooth ? kExitOk : kExitRejected;
}

void print_verdict(std::ostream& out, const SmoothnessVerdict& v)
{
    out << describe(v) << '\n';
    if (v.witness) {
        out << "witness: " << print_series(*v.witness, "t") << '\n';
    }
}

GlaeserLandauReport run_gl(const SampledFunction& f, double tol, const std::string& window, double margin)
{
    CurvatureWindow w;
    w.margin = margin;
    if (window == "interval") {
        w.mode = CurvatureWindow::Mode::interval;
    } else if (window == "fixed") {
        w.mode = CurvatureWindow::Mode::fixed;
    } else {
        w.mode = CurvatureWindow::Mode::taylor_reach;
    }
    return glaeser_landau_check(f, tol, w);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact jet computations for symmetric tensors with boundary poles", "cornerjet"};
    app.require_subcommand(1);

    int order = kDefaultOrder;
    std::string format = "text";
    app.add_option("--order", order, "Truncation order of every jet")
        ->envname("CORNERJET_ORDER")
        ->check(CLI::Range(2, 512));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string space = "halfline";
    const auto add_space = [&](CLI::App* sub) {
        sub->add_option("--space", space, "halfline or quadrant")->check(CLI::IsMember({"halfline", "quadrant"}));
    };

    std::string expr;
    CLI::App* decompose = app.add_subcommand("decompose", "Split a 2-tensor into singular and regular parts");
    add_space(decompose);
    decompose->add_option("tensor", expr, kTensorHelp)->required();

    std::string plot_text;
    CLI::App* pullback = app.add_subcommand("pullback", "Pull a tensor back along a path germ");
    add_space(pullback);
    pullback
        ->add_option("--plot", plot_text,
                     "Half-line: t^2, t^4*(1+t), 1 + t, interior(x0; p), flat. Quadrant: sq or (p1, p2)")
        ->required();
    pullback->add_option("tensor", expr, kTensorHelp)->required();

    int k = 0;
    bool table = false;
    CLI::App* capacity_cmd = app.add_subcommand("capacity", "Largest pole order a degree-k tensor may carry");
    capacity_cmd->add_option("k", k, "Tensor degree")->required()->check(CLI::NonNegativeNumber);
    capacity_cmd->add_flag("--table", table, "Print the table for 0..k");

    int p = 0;
    int m_max = kDefaultMaxContact;
    CLI::App* verify = app.add_subcommand("verify-capacity", "Margins k(2m-1) - 2mp for m = 1..m-max");
    verify->add_option("k", k, "Tensor degree")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("p", p, "Pole order")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--m-max", m_max, "Largest contact order")->check(CLI::PositiveNumber);

    std::vector<int> boundary_ms{1, 2, 3};
    std::vector<std::string> interior_points{"1/2", "1", "2"};
    std::string velocity = "1";
    CLI::App* metric = app.add_subcommand("check-metric", "Check positivity and definiteness on test paths");
    metric->add_option("metric", expr, "Half-line 2-tensor, e.g. \"(1 + x)*dx^2\"")->required();
    metric->add_option("--boundary-ms", boundary_ms, "Contact orders m of the germs t^(2m)")->delimiter(',');
    metric->add_option("--interior-points", interior_points, "Base points of the germs x0 + v t")->delimiter(',');
    metric->add_option("--velocity", velocity, "Velocity v of the interior germs");

    std::string f_text;
    std::string sos_text;
    std::vector<std::string> interval;
    int grid = kDefaultGrid;
    double tol = kDefaultTolerance;
    std::string window = "taylor-reach";
    double margin = 0.0;
    CLI::App* gl = app.add_subcommand("gl-check", "Grid check of f'(t)^2 <= 2 C f(t) for a nonnegative polynomial");
    CLI::Option* f_opt = gl->add_option("--f", f_text, "Polynomial in t");
    CLI::Option* sos_opt = gl->add_option("--sos", sos_text, "Sum of squares \"p1; p2; ...\"");
    f_opt->excludes(sos_opt);
    gl->add_option("--interval", interval, "Endpoints a b (rationals)")->expected(2)->required();
    gl->add_option("--grid", grid, "Grid intervals")->check(CLI::Range(16, 1 << 24));
    gl->add_option("--tol", tol, "Tolerance")->check(CLI::NonNegativeNumber);
    gl->add_option("--window", window, "Where sup |f''| is taken")
        ->check(CLI::IsMember({"interval", "fixed", "taylor-reach"}));
    gl->add_option("--margin", margin, "Widening for --window fixed")->check(CLI::NonNegativeNumber);

    CLI::App* parity = app.add_subcommand("parity", "Parity sectors of the pullback along (u, v) -> (u^2, v^2)");
    parity->add_option("tensor", expr, "Quadrant 2-tensor")->required();

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output o;
    o.json = format == "json";
    int code = kExitOk;

    const auto fail = [&](const char* kind, const std::string& message, int exit_code,
                          std::optional<std::pair<int, int>> where = std::nullopt) {
        o.doc["status"] = "error";
        Json e = {{"kind", kind}, {"message", message}};
        if (where) {
            e["line"] = where->first;
            e["column"] = where->second;
        }
        o.doc["error"] = e;
        err << "error: " << message << '\n';
        return exit_code;
    };

    try {
        if (*decompose) {
            o.doc["command"] = "decompose";
            o.doc["space"] = space;
            if (space == "halfline") {
                const HalfLineTensor tau = parse_halfline(expr, order);
                o.doc["input"] = encode(tau);
                try {
                    const Decomposition d = decompose_halfline(tau, order);
                    o.doc["status"] = "ok";
                    o.doc["decomposition"] = encode(d);
                    o.text << "c = " << to_string(d.c) << ", regular = " << print_polynomial(d.regular, "x") << '\n';
                } catch (const NotSmoothError& e) {
                    code = kExitRejected;
                    const PlotGerm sq = make_boundary_plot(1, Jet1::constant(1, 0));
                    o.doc["status"] = "rejected";
                    o.doc["message"] = e.what();
                    o.doc["witness"] = {{"plot", encode(sq)}, {"verdict", encode(e.witness())}};
                    o.text << "rejected: " << e.what() << '\n' << "plot: " << print(sq) << '\n';
                    print_verdict(o.text, e.witness());
                }
            } else {
                const QuadrantTensor tau = parse_quadrant(expr, order);
                o.doc["input"] = encode(tau);
                try {
                    const QuadrantDecomposition d = decompose_quadrant(tau);
                    o.doc["status"] = "ok";
                    o.doc["decomposition"] = encode(d);
                    o.text << "A(y) = " << print_polynomial(d.A, "y") << '\n'
                           << "B(x) = " << print_polynomial(d.B, "x") << '\n'
                           << "regular = " << print_regular(d) << '\n';
                } catch (const QuadrantSmoothnessError& e) {
                    code = kExitRejected;
                    o.doc["status"] = "rejected";
                    o.doc["message"] = e.what();
                    o.doc["kind"] = e.kind() == QuadrantSmoothnessError::Kind::singular_cross_term
                                        ? "singular_cross_term"
                                        : "not_smooth";
                    o.doc["parity"] = encode(e.report());
                    o.text << "rejected: " << e.what() << '\n';
                    print_parity(o.text, e.report());
                }
            }
        } else if (*pullback) {
            o.doc["command"] = "pullback";
            o.doc["space"] = space;
            if (space == "halfline") {
                const HalfLineTensor tau = parse_halfline(expr, order);
                const PlotGerm plot = parse_plot(plot_text);
                const SmoothnessVerdict v = pullback_halfline(tau, plot, order);
                code = exit_for(v.status);
                o.doc["status"] = code == kExitOk ? "ok" : "rejected";
                o.doc["input"] = encode(tau);
                o.doc["plot"] = encode(plot);
                o.doc["verdict"] = encode(v);
                print_verdict(o.text, v);
            } else {
                const QuadrantTensor tau = parse_quadrant(expr, order);
                const QuadrantPlotGerm plot = parse_quadrant_plot(plot_text);
                o.doc["input"] = encode(tau);
                o.doc["plot"] = encode(plot);
                if (plot.is_sq()) {
                    const Sq2Pullback pb = pullback_sq2(tau);
                    const auto nonnegative = [](const LaurentJet2& c) {
                        return c.is_zero() || (c.valuations().first >= 0 && c.valuations().second >= 0);
                    };
                    const bool ok = nonnegative(pb.du2) && nonnegative(pb.dv2) && nonnegative(pb.dudv);
                    code = ok ? kExitOk : kExitRejected;
                    o.doc["status"] = ok ? "ok" : "rejected";
                    o.doc["pullback"] = encode(pb);
                    o.text << (ok ? "Smooth" : "Pole") << '\n'
                           << "du^2: " << print_polynomial(pb.du2, "u", "v") << '\n'
                           << "dv^2: " << print_polynomial(pb.dv2, "u", "v") << '\n'
                           << "du*dv: " << print_polynomial(pb.dudv, "u", "v") << '\n';
                } else {
                    const SmoothnessVerdict v = pullback_path2(tau, plot, order);
                    code = exit_for(v.status);
                    o.doc["status"] = code == kExitOk ? "ok" : "rejected";
                    o.doc["verdict"] = encode(v);
                    print_verdict(o.text, v);
                }
            }
        } else if (*capacity_cmd) {
            o.doc["command"] = "capacity";
            o.doc["status"] = "ok";
            o.doc["k"] = k;
            if (table) {
                const std::vector<CapacityEntry> t = capacity_table(k);
                o.doc["table"] = encode(t);
                for (const auto& e : t) {
                    o.text << "capacity(" << e.k << ") = " << e.capacity << '\n';
                }
            } else {
                o.doc["capacity"] = capacity(k);
                o.text << capacity(k) << '\n';
            }
        } else if (*verify) {
            const CapacityReport r = verify_capacity(k, p, m_max);
            code = r.admissible ? kExitOk : kExitRejected;
            o.doc["command"] = "verify-capacity";
            o.doc["status"] = r.admissible ? "ok" : "rejected";
            o.doc["report"] = encode(r);
            o.text << (r.admissible ? "admissible" : "inadmissible") << " (binding m = " << r.binding_m << ")\n"
                   << "margins:";
            for (long m : r.margins) {
                o.text << ' ' << m;
            }
            o.text << '\n';
        } else if (*metric) {
            o.doc["command"] = "check-metric";
            const HalfLineTensor g = parse_halfline(expr, order);
            TestPlotFamily family;
            family.boundary_ms = boundary_ms;
            family.interior_points.clear();
            for (const auto& s : interior_points) {
                family.interior_points.push_back(parse_rational_literal(s));
            }
            family.interior_velocity = parse_rational_literal(velocity);
            family.validate();
            const MetricVerdict v = check_metric(g, family);
            code = v.accepted ? kExitOk : kExitRejected;
            o.doc["status"] = v.accepted ? "ok" : "rejected";
            o.doc["input"] = encode(g);
            o.doc["verdict"] = encode(v);
            if (v.accepted) {
                o.text << "accepted (no germ of the test family refutes it)\n";
            } else {
                o.text << "rejected: " << to_string(v.witness->clause) << " along " << print(v.witness->plot)
                       << ", value " << to_string(v.witness->value) << '\n';
            }
        } else if (*gl) {
            o.doc["command"] = "gl-check";
            if (f_text.empty() == sos_text.empty()) {
                throw CLI::ValidationError("gl-check needs exactly one of --f and --sos");
            }
            SampledFunction f;
            if (!f_text.empty()) {
                const auto polys = parse_polynomials(f_text);
                if (polys.size() != 1) {
                    throw CLI::ValidationError("--f takes one polynomial; use --sos for a sum of squares");
                }
                f.representation = RationalPolynomial(polys.front());
            } else {
                SumOfSquares s;
                for (auto& poly : parse_polynomials(sos_text)) {
                    s.terms.emplace_back(std::move(poly));
                }
                f.representation = std::move(s);
            }
            f.a = parse_rational_literal(interval.at(0));
            f.b = parse_rational_literal(interval.at(1));
            f.grid_n = grid;
            f.validate();
            o.doc["input"] = {{"interval", {encode(f.a), encode(f.b)}}, {"grid", grid}};
            try {
                const GlaeserLandauReport r = run_gl(f, tol, window, margin);
                code = r.pass ? kExitOk : kExitRejected;
                o.doc["status"] = r.pass ? "ok" : "rejected";
                o.doc["report"] = encode(r);
                o.text << (r.pass ? "pass" : "fail") << '\n'
                       << "C = " << number(r.C) << '\n'
                       << "max_violation = " << number(r.max_violation) << '\n'
                       << "worst_t = " << number(r.worst_t) << '\n'
                       << "window = [" << number(r.window_lo) << ", " << number(r.window_hi) << "]\n";
                if (!r.note.empty()) {
                    o.text << "note: " << r.note << '\n';
                }
            } catch (const Error& e) {
                code = kExitRejected;
                o.doc["status"] = "rejected";
                o.doc["message"] = e.what();
                o.text << "rejected: " << e.what() << '\n';
            }
        } else if (*parity) {
            o.doc["command"] = "parity";
            const QuadrantTensor tau = parse_quadrant(expr, order);
            const ParityReport r = check_gamma_parity(tau);
            code = r.holds() ? kExitOk : kExitRejected;
            o.doc["status"] = r.holds() ? "ok" : "rejected";
            o.doc["input"] = encode(tau);
            o.doc["parity"] = encode(r);
            print_parity(o.text, r);
        }
    } catch (const ParseError& e) {
        code = fail("parse", e.what(), kExitUsage, std::pair{e.line(), e.column()});
    } catch (const TruncationError& e) {
        code = fail("truncation", std::string(e.what()) + " (raise --order)", kExitUsage);
    } catch (const CLI::ValidationError& e) {
        code = fail("usage", e.what(), kExitUsage);
    } catch (const NotSmoothError& e) {
        code = fail("not_smooth", e.what(), kExitRejected);
        o.doc["witness"] = encode(e.witness());
    } catch (const std::invalid_argument& e) {
        code = fail("usage", e.what(), kExitUsage);
    } catch (const Error& e) {
        code = fail("rejected", e.what(), kExitRejected);
    }

    if (o.json) {
        o.doc["exit_code"] = code;
        out << o.doc.dump(2) << '\n';
    } else {
        out << o.text.str();
    }
    return code;
}

} // namespace cornerjet::cli
