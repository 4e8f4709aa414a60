#pragma once

#include <string>

#include <json.hpp>

#include "vgraph/families.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/voltage.hpp"
#include "vgraph/zgraph.hpp"
#include "vgraph/zregion.hpp"

namespace vgraph {

// DOT multigraph: nodes in vertex order, edges in edge order, loops as
// self-edges. Labels are element lists rendered with the group's names.
std::string emit_dot(const ZGraph& zg, const FiniteGroup& group, const std::string& name = "zgraph");

nlohmann::json elements_json(std::span<const Element> xs, const FiniteGroup& group);
nlohmann::json zgraph_json(const ZGraph& zg, const FiniteGroup& group);
nlohmann::json check_json(const TheoremCheck& c);
nlohmann::json circle_report_json(const CircleReport& rep, const FiniteGroup& group);
nlohmann::json surface_json(const EmbeddedGraph& g);
nlohmann::json derive_json(const VoltageEmbedding& ve, const DerivedEmbedding& derived);
nlohmann::json family_json(const ExampleFamily& ex, const FamilyResult& r);
// Timing is included only on request.
nlohmann::json fuzz_report_json(const FuzzReport& r, bool timing = false);

}  // namespace vgraph
