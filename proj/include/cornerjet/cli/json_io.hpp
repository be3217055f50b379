#pragma once

#include "cornerjet/capacity.hpp"
#include "cornerjet/decompose.hpp"
#include "cornerjet/metric.hpp"
#include "cornerjet/numeric.hpp"
#include "cornerjet/pullback.hpp"

#include <json.hpp>

#include <vector>

// JSON forms of the engine's values and reports. Rationals are always "num/den" strings; the layout is
// described in docs/json-schema.md. Every encode has a matching decode so output can be read back.
namespace cornerjet::cli {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Json encode(const Jet1& j);
Json encode(const Jet2& j);
Json encode(const LaurentJet& j);
Json encode(const LaurentJet2& j);
Json encode(const HalfLineTensor& t);
Json encode(const QuadrantTensor& t);
Json encode(const PlotGerm& p);
Json encode(const QuadrantPlotGerm& p);
Json encode(const SmoothnessVerdict& v);
Json encode(const Decomposition& d);
Json encode(const ParityReport& r);
Json encode(const QuadrantDecomposition& d);
Json encode(const MetricVerdict& v);
Json encode(const CapacityReport& r);
Json encode(const std::vector<CapacityEntry>& table);
Json encode(const GlaeserLandauReport& r);
Json encode(const Sq2Pullback& p);

/// Throws Error on a malformed document.
template <class T>
T decode(const Json& j);

template <> Rational decode<Rational>(const Json& j);
template <> Jet1 decode<Jet1>(const Json& j);
template <> Jet2 decode<Jet2>(const Json& j);
template <> LaurentJet decode<LaurentJet>(const Json& j);
template <> LaurentJet2 decode<LaurentJet2>(const Json& j);
template <> HalfLineTensor decode<HalfLineTensor>(const Json& j);
template <> QuadrantTensor decode<QuadrantTensor>(const Json& j);
template <> PlotGerm decode<PlotGerm>(const Json& j);
template <> QuadrantPlotGerm decode<QuadrantPlotGerm>(const Json& j);
template <> SmoothnessVerdict decode<SmoothnessVerdict>(const Json& j);
template <> Decomposition decode<Decomposition>(const Json& j);
template <> ParityReport decode<ParityReport>(const Json& j);
template <> QuadrantDecomposition decode<QuadrantDecomposition>(const Json& j);
template <> MetricVerdict decode<MetricVerdict>(const Json& j);
template <> CapacityReport decode<CapacityReport>(const Json& j);
template <> std::vector<CapacityEntry> decode<std::vector<CapacityEntry>>(const Json& j);
template <> GlaeserLandauReport decode<GlaeserLandauReport>(const Json& j);
template <> Sq2Pullback decode<Sq2Pullback>(const Json& j);

} // namespace cornerjet::cli
