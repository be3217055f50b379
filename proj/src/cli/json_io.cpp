#include "cornerjet/cli/json_io.hpp"

#include "cornerjet/cli/printer.hpp"

#include <string>

namespace cornerjet::cli {

namespace {

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

Json terms_of(const std::map<std::pair<int, int>, Rational>& terms)
{
    Json out = Json::array();
    for (const auto& [e, c] : terms) {
        out.push_back({{"x", e.first}, {"y", e.second}, {"c", encode(c)}});
    }
    return out;
}

std::map<std::pair<int, int>, Rational> terms_from(const Json& j)
{
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& t : j) {
        out[{t.at("x").get<int>(), t.at("y").get<int>()}] = decode<Rational>(t.at("c"));
    }
    return out;
}

std::vector<Rational> rationals_from(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& c : j) {
        out.push_back(decode<Rational>(c));
    }
    return out;
}

template <class E, std::size_t N>
E enum_from(const Json& j, const E (&values)[N], const char* what)
{
    const std::string s = j.get<std::string>();
    for (E v : values) {
        if (s == to_string(v)) {
            return v;
        }
    }
    throw Error(std::string("unknown ") + what + " '" + s + "'");
}

constexpr ParitySector kSectors[] = {ParitySector::even_even, ParitySector::even_odd, ParitySector::odd_even,
                                     ParitySector::odd_odd};
constexpr Smoothness kStatuses[] = {Smoothness::smooth, Smoothness::pole, Smoothness::flat_smooth,
                                    Smoothness::flat_indeterminate};
constexpr MetricClause kClauses[] = {MetricClause::positivity, MetricClause::definiteness_zero_required,
                                     MetricClause::definiteness_nonzero_required};

Json encode_component(const ComponentParity& c)
{
    Json sectors = Json::object();
    for (ParitySector s : kSectors) {
        const SectorOccupancy& o = c.sector(s);
        sectors[to_string(s)] = {{"terms", o.terms},
                                 {"mass", encode(o.mass)},
                                 {"min_exponents", {o.min_exponents.first, o.min_exponents.second}}};
    }
    return {{"allowed", to_string(c.allowed)},
            {"holds", c.holds},
            {"negative_valuation", c.negative_valuation},
            {"sectors", sectors}};
}

ComponentParity decode_component(const Json& j)
{
    ComponentParity c;
    c.allowed = enum_from(j.at("allowed"), kSectors, "parity sector");
    c.holds = j.at("holds").get<bool>();
    c.negative_valuation = j.at("negative_valuation").get<bool>();
    for (ParitySector s : kSectors) {
        const Json& o = j.at("sectors").at(to_string(s));
        SectorOccupancy& occ = c.sectors[static_cast<std::size_t>(s)];
        occ.terms = o.at("terms").get<std::size_t>();
        occ.mass = decode<Rational>(o.at("mass"));
        occ.min_exponents = {o.at("min_exponents").at(0).get<int>(), o.at("min_exponents").at(1).get<int>()};
    }
    return c;
}

} // namespace

Json encode(const Rational& r) { return to_fraction_string(r); }

Json encode(const Jet1& j)
{
    Json coeffs = Json::array();
    for (const auto& c : j.coeffs()) {
        coeffs.push_back(encode(c));
    }
    return {{"order", j.order()}, {"coefficients", coeffs}};
}

Json encode(const Jet2& j)
{
    std::map<std::pair<int, int>, Rational> terms;
    for (int d = 0; d <= j.order(); ++d) {
        for (int b = 0; b <= d; ++b) {
            if (j.coeff(d - b, b) != 0) {
                terms[{d - b, b}] = j.coeff(d - b, b);
            }
        }
    }
    return {{"order", j.order()}, {"terms", terms_of(terms)}};
}

Json encode(const LaurentJet& j)
{
    Json coeffs = Json::array();
    for (const auto& c : j.coeffs()) {
        coeffs.push_back(encode(c));
    }
    return {{"valuation", j.valuation()},
            {"top_degree", j.is_zero() ? Json(nullptr) : Json(j.top_degree())},
            {"coefficients", coeffs}};
}

Json encode(const LaurentJet2& j) { return {{"order", j.order()}, {"terms", terms_of(j.terms())}}; }

Json encode(const HalfLineTensor& t)
{
    return {{"space", "halfline"}, {"degree", t.degree()}, {"coefficient", encode(t.coeff())}, {"text", print(t)}};
}

Json encode(const QuadrantTensor& t)
{
    return {{"space", "quadrant"}, {"a", encode(t.a())}, {"b", encode(t.b())}, {"c", encode(t.c())}, {"text", print(t)}};
}

Json encode(const PlotGerm& p)
{
    if (p.is_flat()) {
        return {{"kind", "flat"}, {"text", print(p)}};
    }
    if (p.is_interior()) {
        return {{"kind", "interior"},
                {"base", encode(p.interior().base)},
                {"jet", encode(p.interior().jet)},
                {"text", print(p)}};
    }
    return {{"kind", "boundary"}, {"m", p.boundary().m}, {"unit", encode(p.boundary().unit)}, {"text", print(p)}};
}

Json encode(const QuadrantPlotGerm& p)
{
    if (p.is_sq()) {
        return {{"kind", "sq"}, {"text", print(p)}};
    }
    return {{"kind", "pair"}, {"x", encode(p.components().px)}, {"y", encode(p.components().py)}, {"text", print(p)}};
}

Json encode(const SmoothnessVerdict& v)
{
    return {{"status", to_string(v.status)},
            {"pole_order", v.pole_order},
            {"witness", v.witness ? encode(*v.witness) : Json(nullptr)},
            {"text", describe(v)}};
}

Json encode(const Decomposition& d)
{
    return {{"c", encode(d.c)},
            {"regular", encode(d.regular)},
            {"trace", {{"g", encode(d.trace.g)}, {"h", encode(d.trace.h)}}}};
}

Json encode(const ParityReport& r)
{
    return {{"holds", r.holds()},
            {"du2", encode_component(r.du2)},
            {"dv2", encode_component(r.dv2)},
            {"dudv", encode_component(r.dudv)}};
}

Json encode(const QuadrantDecomposition& d)
{
    return {{"A", encode(d.A)},
            {"B", encode(d.B)},
            {"regular_xx", encode(d.regular_xx)},
            {"regular_yy", encode(d.regular_yy)},
            {"regular_xy", encode(d.regular_xy)},
            {"parity", encode(d.parity)}};
}

Json encode(const MetricVerdict& v)
{
    Json witness = nullptr;
    if (v.witness) {
        witness = {{"plot", encode(v.witness->plot)},
                   {"value", encode(v.witness->value)},
                   {"clause", to_string(v.witness->clause)}};
    }
    return {{"accepted", v.accepted}, {"witness", witness}};
}

Json encode(const CapacityReport& r)
{
    return {{"k", r.k},
            {"p", r.p},
            {"margins", r.margins},
            {"pullback_valuations", r.pullback_valuations},
            {"admissible", r.admissible},
            {"binding_m", r.binding_m}};
}

Json encode(const std::vector<CapacityEntry>& table)
{
    Json out = Json::array();
    for (const auto& e : table) {
        out.push_back({{"k", e.k}, {"capacity", e.capacity}});
    }
    return out;
}

Json encode(const GlaeserLandauReport& r)
{
    return {{"C", r.C},
            {"max_violation", r.max_violation},
            {"pass", r.pass},
            {"tol", r.tol},
            {"worst_t", r.worst_t},
            {"window", {r.window_lo, r.window_hi}},
            {"note", r.note}};
}

Json encode(const Sq2Pullback& p)
{
    return {{"du2", encode(p.du2)}, {"dv2", encode(p.dv2)}, {"dudv", encode(p.dudv)}};
}

template <>
Rational decode<Rational>(const Json& j)
{
    return guarded([&] {
        try {
            return parse_fraction(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw Error(std::string("malformed rational: ") + e.what());
        }
    });
}

template <>
Jet1 decode<Jet1>(const Json& j)
{
    return guarded([&] {
        Jet1 out(rationals_from(j.at("coefficients")));
        if (out.order() != j.at("order").get<int>()) {
            throw Error("jet order does not match its coefficient count");
        }
        return out;
    });
}

template <>
Jet2 decode<Jet2>(const Json& j)
{
    return guarded([&] {
        Jet2 out(j.at("order").get<int>());
        for (const auto& [e, c] : terms_from(j.at("terms"))) {
            out.set(e.first, e.second, c);
        }
        return out;
    });
}

template <>
LaurentJet decode<LaurentJet>(const Json& j)
{
    return guarded([&] { return LaurentJet(j.at("valuation").get<int>(), rationals_from(j.at("coefficients"))); });
}

template <>
LaurentJet2 decode<LaurentJet2>(const Json& j)
{
    return guarded([&] { return LaurentJet2(terms_from(j.at("terms")), j.at("order").get<int>()); });
}

template <>
HalfLineTensor decode<HalfLineTensor>(const Json& j)
{
    return guarded(
        [&] { return HalfLineTensor(j.at("degree").get<int>(), decode<LaurentJet>(j.at("coefficient"))); });
}

template <>
QuadrantTensor decode<QuadrantTensor>(const Json& j)
{
    return guarded([&] {
        return QuadrantTensor(decode<LaurentJet2>(j.at("a")), decode<LaurentJet2>(j.at("b")),
                              decode<LaurentJet2>(j.at("c")));
    });
}

template <>
PlotGerm decode<PlotGerm>(const Json& j)
{
    return guarded([&] {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "flat") {
            return PlotGerm::flat();
        }
        if (kind == "interior") {
            return make_interior_plot(decode<Rational>(j.at("base")), decode<Jet1>(j.at("jet")));
        }
        if (kind == "boundary") {
            return make_boundary_plot(j.at("m").get<int>(), decode<Jet1>(j.at("unit")));
        }
        throw Error("unknown plot kind '" + kind + "'");
    });
}

template <>
QuadrantPlotGerm decode<QuadrantPlotGerm>(const Json& j)
{
    return guarded([&] {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "sq") {
            return QuadrantPlotGerm::sq();
        }
        if (kind == "pair") {
            return QuadrantPlotGerm::pair(decode<PlotGerm>(j.at("x")), decode<PlotGerm>(j.at("y")));
        }
        throw Error("unknown quadrant plot kind '" + kind + "'");
    });
}

template <>
SmoothnessVerdict decode<SmoothnessVerdict>(const Json& j)
{
    return guarded([&] {
        SmoothnessVerdict v;
        v.status = enum_from(j.at("status"), kStatuses, "smoothness status");
        v.pole_order = j.at("pole_order").get<int>();
        if (!j.at("witness").is_null()) {
            v.witness = decode<LaurentJet>(j.at("witness"));
        }
        return v;
    });
}

template <>
Decomposition decode<Decomposition>(const Json& j)
{
    return guarded([&] {
        return Decomposition{decode<Rational>(j.at("c")), decode<Jet1>(j.at("regular")),
                             {decode<Jet1>(j.at("trace").at("g")), decode<Jet1>(j.at("trace").at("h"))}};
    });
}

template <>
ParityReport decode<ParityReport>(const Json& j)
{
    return guarded([&] {
        return ParityReport{decode_component(j.at("du2")), decode_component(j.at("dv2")),
                            decode_component(j.at("dudv"))};
    });
}

template <>
QuadrantDecomposition decode<QuadrantDecomposition>(const Json& j)
{
    return guarded([&] {
        return QuadrantDecomposition{decode<Jet1>(j.at("A")),          decode<Jet1>(j.at("B")),
                                     decode<Jet2>(j.at("regular_xx")), decode<Jet2>(j.at("regular_yy")),
                                     decode<Jet2>(j.at("regular_xy")), decode<ParityReport>(j.at("parity"))};
    });
}

template <>
MetricVerdict decode<MetricVerdict>(const Json& j)
{
    return guarded([&] {
        MetricVerdict v;
        v.accepted = j.at("accepted").get<bool>();
        const Json& w = j.at("witness");
        if (!w.is_null()) {
            v.witness = MetricWitness{decode<PlotGerm>(w.at("plot")), decode<Rational>(w.at("value")),
                                      enum_from(w.at("clause"), kClauses, "metric clause")};
        }
        return v;
    });
}

template <>
CapacityReport decode<CapacityReport>(const Json& j)
{
    return guarded([&] {
        CapacityReport r;
        r.k = j.at("k").get<int>();
        r.p = j.at("p").get<int>();
        r.margins = j.at("margins").get<std::vector<long>>();
        r.pullback_valuations = j.at("pullback_valuations").get<std::vector<long>>();
        r.admissible = j.at("admissible").get<bool>();
        r.binding_m = j.at("binding_m").get<int>();
        return r;
    });
}

template <>
std::vector<CapacityEntry> decode<std::vector<CapacityEntry>>(const Json& j)
{
    return guarded([&] {
        std::vector<CapacityEntry> out;
        for (const auto& e : j) {
            out.push_back({e.at("k").get<int>(), e.at("capacity").get<int>()});
        }
        return out;
    });
}

template <>
GlaeserLandauReport decode<GlaeserLandauReport>(const Json& j)
{
    return guarded([&] {
        GlaeserLandauReport r;
        r.C = j.at("C").get<double>();
        r.max_violation = j.at("max_violation").get<double>();
        r.pass = j.at("pass").get<bool>();
        r.tol = j.at("tol").get<double>();
        r.worst_t = j.at("worst_t").get<double>();
        r.window_lo = j.at("window").at(0).get<double>();
        r.window_hi = j.at("window").at(1).get<double>();
        r.note = j.at("note").get<std::string>();
        return r;
    });
}

template <>
Sq2Pullback decode<Sq2Pullback>(const Json& j)
{
    return guarded([&] {
        return Sq2Pullback{decode<LaurentJet2>(j.at("du2")), decode<LaurentJet2>(j.at("dv2")),
                           decode<LaurentJet2>(j.at("dudv"))};
    });
}

} // namespace cornerjet::cli
