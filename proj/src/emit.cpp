#include "vgraph/emit.hpp"

#include <sstream>

namespace vgraph {

namespace {

std::string element_list(std::span<const Element> xs, const FiniteGroup& group) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + group.name(xs[i]);
  return s + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ZGraph& zg, const FiniteGroup& group, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (int i = 0; i < zg.vertex_count(); ++i) {
    const ZVertex& v = zg.vertices[i];
    out << "  v" << i << " [label=" << quoted(v.tag + " " + element_list(v.label, group)) << "];\n";
  }
  for (const ZEdge& e : zg.edges)
    out << "  v" << e.a << " -- v" << e.b << " [label=" << quoted(element_list(e.label, group)) << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json elements_json(std::span<const Element> xs, const FiniteGroup& group) {
  nlohmann::json out = nlohmann::json::array();
  for (Element x : xs) out.push_back(group.name(x));
  return out;
}

nlohmann::json zgraph_json(const ZGraph& zg, const FiniteGroup& group) {
  nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const ZVertex& v : zg.vertices) vertices.push_back({{"tag", v.tag}, {"label", elements_json(v.label, group)}});
  for (const ZEdge& e : zg.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"label", elements_json(e.label, group)}});
  return {{"vertices", vertices},
          {"edges", edges},
          {"degrees", zg.degrees()},
          {"loops", zg.loop_count()},
          {"connected", zg.is_connected()},
          {"bipartite", zg.is_bipartite()}};
}

nlohmann::json check_json(const TheoremCheck& c) {
  return {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
}

nlohmann::json circle_report_json(const CircleReport& rep, const FiniteGroup& group) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) checks.push_back(check_json(c));
  nlohmann::json out = {{"kind", rep.kind},
                        {"predicted_regions", rep.predicted_regions},
                        {"observed_regions", rep.observed_regions},
                        {"checks", checks}};
  if (rep.coset) out["coset"] = zgraph_json(*rep.coset, group);
  if (rep.brute) out["brute"] = zgraph_json(*rep.brute, group);
  return out;
}

nlohmann::json surface_json(const EmbeddedGraph& g) {
  const FaceStructure faces = trace_faces(g);
  nlohmann::json components = nlohmann::json::array();
  for (const SurfaceType& s : component_surfaces(g, faces))
    components.push_back({{"euler", s.euler}, {"orientable", s.orientable}, {"genus", s.genus}});
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"faces", faces.face_count()},
          {"euler", euler_characteristic(g, faces)},
          {"orientable", is_orientable(g)},
          {"components", components}};
}

nlohmann::json derive_json(const VoltageEmbedding& ve, const DerivedEmbedding& derived) {
  const FaceLiftPrediction p = face_lift_prediction(ve);
  const CountCheck c = component_count(ve, derived);
  return {{"group", ve.group().literal()},
          {"order", ve.group().order()},
          {"base", surface_json(ve.base())},
          {"derived", surface_json(derived.graph())},
          {"prediction",
           {{"faces", p.faces},
            {"euler", p.euler},
            {"face_orders", p.face_orders},
            {"components", c.predicted}}}};
}

nlohmann::json family_json(const ExampleFamily& ex, const FamilyResult& r) {
  nlohmann::json obs = nlohmann::json::array();
  for (const auto& o : r.observations)
    obs.push_back({{"name", o.name}, {"expected", o.expected}, {"observed", o.observed}, {"agrees", o.agrees()}});
  return {{"id", ex.id},
          {"ok", r.ok()},
          {"observations", obs},
          {"notes", r.notes},
          {"zgraphs_equal", r.zgraphs_equal},
          {"zgraph", r.zgraph_detail}};
}

nlohmann::json fuzz_report_json(const FuzzReport& r, bool timing) {
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, t] : r.tallies)
    tallies[name] = {{"confirmed", t.confirmed}, {"vacuous", t.vacuous}, {"failed", t.failed}};
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& i : r.instances) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : i.checks) checks.push_back(check_json(c));
    nlohmann::json item = {{"index", i.index}, {"seed", i.seed}, {"summary", i.summary}, {"checks", checks}};
    if (timing) item["seconds"] = i.seconds;
    if (!i.reproducer.empty()) item["reproducer"] = i.reproducer;
    instances.push_back(item);
  }
  nlohmann::json out = {{"seed", r.seed}, {"count", r.count}, {"ok", r.ok()}, {"tallies", tallies},
                        {"instances", instances}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace vgraph
