#pragma once

#include <json.hpp>

#include "berge/berge_cycle.hpp"
#include "berge/census.hpp"
#include "berge/certificate.hpp"
#include "berge/constructions.hpp"
#include "berge/deg_pipeline.hpp"
#include "berge/girth.hpp"
#include "berge/indep.hpp"
#include "berge/peel.hpp"

namespace berge {

using Json = nlohmann::ordered_json;

Json hypergraph_json(const Hypergraph& h);
// Throws ParseError on a malformed object.
Hypergraph hypergraph_from_json(const Json& j);

// {"k", "mode", "edges", "sdr"}; vertices are reported through h's origin ids.
Json witness_json(const Hypergraph& h, const BergeWitness& w, CycleMode mode);
Json freeness_json(const Hypergraph& h, const FreenessResult& result, const ForbiddenFamily& family);

Json girth_json(const GirthReport& report);
Json deg_pipeline_json(const DegPipelineReport& report);
Json census_json(const CycleCensus& census, const Graph& g);
Json trace_json(const ConstructionTrace& trace);
Json jn_json(const JnReport& report);
Json peel_report_json(const PeelReport& report);
Json light_trace_json(const LightPairTrace& trace, const Hypergraph& h);
Json heavy_json(const HeavyResult& result);
Json pipeline_json(const PipelineReport& report, const Hypergraph& h);
Json alpha_json(const AlphaResult& result);
Json estimate_json(const IndepProbEstimate& estimate);
Json union_bound_json(const UnionBoundReport& report);

Json certificate_json(const Certificate& cert);
// Throws ParseError on a malformed certificate.
Certificate certificate_from_json(const Json& j);

}  // namespace berge
