#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "vgraph/emit.hpp"
#include "vgraph/error.hpp"
#include "vgraph/families.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"
#include "vgraph/medial.hpp"
#include "vgraph/zregion.hpp"

using namespace vgraph;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kValidation = 2, kTheorem = 3;

struct Options {
  std::string file;
  std::string circle;
  std::string faces;
  std::string component;
  std::string method = "both";
  std::string family;
  std::vector<int> params;
  std::string reproducer_dir = ".";
  std::uint64_t seed = 1;
  int count = 100;
  int vertex = -1;
  bool json = false;
  bool dot = false;
  bool all_theorems = false;
  bool print = false;
  bool timing = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Instance load(const Options& o) {
  Instance inst = parse_instance(read_input(o.file));
  validate(inst.embedding);
  return inst;
}

Circle pick_circle(const Instance& inst, const std::string& text) {
  for (const auto& c : inst.circles)
    if (c.name == text) return instance_circle(inst, c);
  if (text.empty()) {
    if (inst.circles.empty()) throw ValidationError("no circle given (use --circle)");
    return instance_circle(inst, inst.circles.front());
  }
  return instance_circle(inst, {"", parse_edge_list(inst, text)});
}

FaceChain pick_faces(const Instance& inst, const std::string& text) {
  for (const auto& f : inst.face_chains)
    if (f.name == text) return f.faces;
  FaceChain out;
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  const int nf = trace_faces(inst.embedding.base()).face_count();
  while (in >> tok) {
    int f = -1;
    try {
      size_t used = 0;
      f = std::stoi(tok, &used);
      if (used != tok.size()) f = -1;
    } catch (const std::exception&) {
      f = -1;
    }
    if (f < 0 || f >= nf) throw ValidationError("unknown face '" + tok + "'");
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Element pick_element(const FiniteGroup& grp, const std::string& text) {
  if (text.empty()) return grp.identity();
  const auto x = grp.parse_element(text);
  if (!x) throw ValidationError("'" + text + "' is not an element of " + grp.literal());
  return *x;
}

void print_surface(const std::string& title, const EmbeddedGraph& g) {
  const json s = surface_json(g);
  std::cout << title << ": V=" << s["vertices"] << " E=" << s["edges"] << " F=" << s["faces"]
            << " chi=" << s["euler"] << (s["orientable"].get<bool>() ? " orientable" : " nonorientable")
            << " components=" << s["components"].size() << "\n";
}

int cmd_validate(const Options& o) {
  const Instance inst = load(o);
  if (o.json) {
    std::cout << surface_json(inst.embedding.base()).dump(2) << "\n";
  } else {
    print_surface("ok", inst.embedding.base());
  }
  return kOk;
}

int cmd_derive(const Options& o) {
  const Instance inst = load(o);
  const VoltageEmbedding& ve = inst.embedding;
  const DerivedEmbedding derived = derive(ve);
  const json j = derive_json(ve, derived);
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group " << ve.group().literal() << " (order " << ve.group().order() << ")\n";
    print_surface("base", ve.base());
    print_surface("derived", derived.graph());
    std::cout << "predicted: faces=" << j["prediction"]["faces"] << " chi=" << j["prediction"]["euler"]
              << " components=" << j["prediction"]["components"] << "\n";
  }
  if (o.print) {
    Instance out = make_instance(VoltageEmbedding(derived.graph(), make_cyclic(1),
                                                  std::vector<Element>(derived.graph().dart_count(), 0)));
    std::cout << print_instance(out);
  }
  const CountCheck c = component_count(ve, derived);
  const FaceLiftPrediction p = face_lift_prediction(ve);
  if (!c.agrees() || p.faces != trace_faces(derived.graph()).face_count()) return kTheorem;
  return kOk;
}

int cmd_analyze(const Options& o) {
  const Instance inst = load(o);
  const VoltageEmbedding& ve = inst.embedding;
  const FiniteGroup& grp = ve.group();
  const DerivedEmbedding derived = derive(ve);
  json j = derive_json(ve, derived);
  const bool has_circle = !o.circle.empty() || !inst.circles.empty();
  std::optional<Circle> circle;
  if (has_circle) circle = pick_circle(inst, o.circle);
  const int v = o.vertex >= 0 ? o.vertex : circle ? circle->base_vertex : 0;
  if (v >= ve.base().vertex_count()) throw ValidationError("vertex out of range");
  j["vertex"] = v;
  j["local_group"] = elements_json(local_voltage_group(ve, v).elements(), grp);

  if (circle) {
    FaceChain faces;
    if (!o.faces.empty()) {
      faces = pick_faces(inst, o.faces);
    } else if (!inst.face_chains.empty()) {
      faces = inst.face_chains.front().faces;
    } else {
      faces.resize(trace_faces(ve.base()).face_count());
      std::iota(faces.begin(), faces.end(), 0);
    }
    const CosetCountReport r = fiber_components(ve, derived, v, faces, circle->edges, circle->traversal);
    auto count = [](const CountCheck& c) { return json{{"predicted", c.predicted}, {"observed", c.observed}}; };
    j["cosets"] = {{"faces", faces},
                   {"circle", circle->edges},
                   {"region_group", elements_json(r.region_group, grp)},
                   {"subgraph_group", elements_json(r.subgraph_group, grp)},
                   {"walk_voltage", grp.name(r.walk_voltage)},
                   {"components", count(r.components)},
                   {"region_components", count(r.region_components)},
                   {"subgraph_components", count(r.subgraph_components)},
                   {"lift_sets", count(r.lift_sets)}};
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  print_surface("base", ve.base());
  print_surface("derived", derived.graph());
  std::cout << "A(" << v << ") = " << j["local_group"].dump() << "\n";
  if (j.contains("cosets")) {
    const json& c = j["cosets"];
    std::cout << "I = " << c["faces"].dump() << ", y = " << c["circle"].dump() << ", omega(W) = "
              << c["walk_voltage"].get<std::string>() << "\n";
    std::cout << "A(v,S:I) = " << c["region_group"].dump() << "\nA(v,G:y) = " << c["subgraph_group"].dump() << "\n";
    for (const char* k : {"components", "region_components", "subgraph_components", "lift_sets"})
      std::cout << k << ": predicted " << c[k]["predicted"] << ", observed " << c[k]["observed"] << "\n";
  }
  return kOk;
}

int cmd_medial(const Options& o) {
  const Instance inst = load(o);
  const VoltageEmbedding& ve = inst.embedding;
  const MedialEmbedding m = medial(ve.base());
  const EmbeddedGraph sub = subdivided_medial(ve.base());
  verify_derived_medial(ve);
  if (o.json) {
    std::cout << json{{"medial", surface_json(m.graph)},
                      {"subdivided_medial", surface_json(sub)},
                      {"derived_medial", "confirmed"}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  if (o.dot) {
    std::cout << "graph medial {\n";
    for (int x = 0; x < m.graph.vertex_count(); ++x)
      std::cout << "  m" << x << " [label=" << std::quoted(inst.edge_names[x]) << "];\n";
    for (int k = 0; k < m.graph.edge_count(); ++k)
      std::cout << "  m" << m.graph.edge(k).tail << " -- m" << m.graph.edge(k).head
                << " [label=\"c" << k << "\"" << (m.graph.sign(k) < 0 ? ", style=dashed" : "") << "];\n";
    std::cout << "}\n";
    return kOk;
  }
  print_surface("medial", m.graph);
  print_surface("subdivided medial", sub);
  std::cout << "derived medial matches medial of derived: confirmed\n";
  return kOk;
}

int cmd_zgraph(const Options& o) {
  const Instance inst = load(o);
  const VoltageEmbedding& ve = inst.embedding;
  const FiniteGroup& grp = ve.group();
  if (o.method != "brute" && o.method != "coset" && o.method != "both")
    throw CLI::ValidationError("--method", "expected brute, coset or both");
  const Circle circle = pick_circle(inst, o.circle);
  const Element a = pick_element(grp, o.component);
  const DerivedEmbedding derived = derive(ve);
  const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
  const CircleReport rep = check_circle(ve, derived, tvg, circle, a);
  const bool failed = std::any_of(rep.checks.begin(), rep.checks.end(),
                                  [](const TheoremCheck& c) { return c.status == CheckStatus::failed; });
  const ZGraph* chosen = o.method == "coset" ? (rep.coset ? &*rep.coset : nullptr) : (rep.brute ? &*rep.brute : nullptr);
  if (o.json) {
    std::cout << circle_report_json(rep, grp).dump(2) << "\n";
  } else if (o.dot) {
    if (!chosen) throw ValidationError("no z-graph for this circle (" + rep.kind + ": lifts are not orientation-preserving)");
    if (o.method == "both" && rep.coset && compare_zgraphs(*rep.coset, *rep.brute))
      throw TheoremFailure("coset and brute-force z-graphs differ");
    std::cout << emit_dot(*chosen, grp);
  } else {
    std::cout << "circle " << rep.kind << ", regions predicted " << rep.predicted_regions << ", observed "
              << rep.observed_regions << "\n";
    for (const auto& c : rep.checks)
      std::cout << "  " << status_name(c.status) << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (chosen) {
      std::cout << chosen->vertex_count() << " vertices, " << chosen->edge_count() << " edges, "
                << chosen->loop_count() << " loops\n";
      std::cout << emit_dot(*chosen, grp);
    }
  }
  return failed ? kTheorem : kOk;
}

int cmd_verify(const Options& o) {
  FuzzReport report;
  if (!o.file.empty()) {
    const Instance inst = load(o);
    std::mt19937_64 rng(o.seed);
    FuzzCaps caps;
    if (!o.all_theorems) caps.samples = 1;
    FuzzInstanceReport r = fuzz_instance(inst.embedding, rng, caps);
    r.seed = o.seed;
    for (const auto& c : r.checks) {
      FuzzTally& t = report.tallies[c.name];
      (c.status == CheckStatus::confirmed ? t.confirmed : c.status == CheckStatus::vacuous ? t.vacuous : t.failed)++;
    }
    report.seed = o.seed;
    report.count = 1;
    report.instances.push_back(std::move(r));
  } else {
    report = fuzz(o.seed, o.count);
  }
  for (const auto& i : report.instances) {
    if (i.reproducer.empty()) continue;
    const auto path = std::filesystem::path(o.reproducer_dir) /
                      ("failure-" + std::to_string(report.seed) + "-" + std::to_string(i.index) + ".vg");
    std::ofstream(path) << i.reproducer;
    std::cerr << "reproducer written to " << path.string() << "\n";
  }
  if (o.json) {
    std::cout << fuzz_report_json(report, o.timing).dump(2) << "\n";
  } else {
    std::cout << "seed " << report.seed << ", " << report.count << " instance" << (report.count == 1 ? "" : "s") << "\n";
    for (const auto& [name, t] : report.tallies)
      std::cout << "  " << name << ": confirmed " << t.confirmed << ", vacuous " << t.vacuous << ", FAILED "
                << t.failed << "\n";
    for (const auto& i : report.instances)
      for (const auto& c : i.checks)
        if (c.status == CheckStatus::failed)
          std::cout << "FAILED instance " << i.index << " (" << i.summary << ") " << c.name << ": " << c.detail << "\n";
    if (o.timing) std::cout << "seconds " << report.seconds << "\n";
  }
  return report.ok() ? kOk : kTheorem;
}

int cmd_example(const Options& o) {
  const ExampleFamily ex = generate_example(o.family, o.params);
  if (o.print) {
    std::cout << print_instance(ex.instance);
    return kOk;
  }
  const FamilyResult r = evaluate_family(ex);
  if (o.json) {
    json j = family_json(ex, r);
    j["instance"] = print_instance(ex.instance);
    std::cout << j.dump(2) << "\n";
  } else if (o.dot) {
    const VoltageEmbedding& ve = ex.instance.embedding;
    const CircleReport rep = check_circle(ve, derive(ve), total_graph_with_voltages(ve),
                                          instance_circle(ex.instance, ex.instance.circles.front()),
                                          ve.group().identity());
    if (!rep.brute) throw ValidationError("no z-graph for this family");
    std::cout << emit_dot(*rep.brute, ve.group(), ex.id);
  } else {
    std::cout << ex.id << ": " << (r.ok() ? "ok" : "MISMATCH") << "\n";
    for (const auto& ob : r.observations)
      std::cout << "  " << (ob.agrees() ? "ok " : "BAD") << "  " << ob.name << ": expected " << ob.expected
                << ", observed " << ob.observed << "\n";
    std::cout << "  " << (r.zgraphs_equal ? "ok " : "BAD") << "  coset z-graph equals brute force"
              << (r.zgraph_detail.empty() ? "" : ": " + r.zgraph_detail) << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return r.ok() ? kOk : kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived embeddings of voltage graph embeddings and their coset structure"};
  app.require_subcommand(1);
  Options o;

  auto file_arg = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("file", o.file, "Instance file ('-' for stdin)");
    if (required) opt->required();
  };
  auto* validate = app.add_subcommand("validate", "Parse and validate an instance file");
  file_arg(validate);
  validate->add_flag("--json", o.json, "JSON output");

  auto* derive_cmd = app.add_subcommand("derive", "Build the derived embedding and compare with predictions");
  file_arg(derive_cmd);
  derive_cmd->add_flag("--json", o.json, "JSON output");
  derive_cmd->add_flag("--print", o.print, "Print the derived embedding as an instance file");

  auto* analyze = app.add_subcommand("analyze", "Local voltage groups and coset component counts");
  file_arg(analyze);
  analyze->add_option("--circle", o.circle, "Circle name or edge list (y and W)");
  analyze->add_option("--faces", o.faces, "Face chain name or face indices (I)");
  analyze->add_option("--vertex", o.vertex, "Base vertex (defaults to the circle's base)");
  analyze->add_flag("--json", o.json, "JSON output");

  auto* medial_cmd = app.add_subcommand("medial", "Medial graph and the derived-medial correspondence");
  file_arg(medial_cmd);
  medial_cmd->add_flag("--json", o.json, "JSON output");
  medial_cmd->add_flag("--dot", o.dot, "DOT output of the medial graph");

  auto* zgraph = app.add_subcommand("zgraph", "z-regions and z-graph of a lifted circle");
  file_arg(zgraph);
  zgraph->add_option("--circle", o.circle, "Circle name or edge list");
  zgraph->add_option("--component", o.component, "Group element a selecting the component of v^a");
  zgraph->add_option("--method", o.method, "brute, coset or both")->check(CLI::IsMember({"brute", "coset", "both"}));
  zgraph->add_flag("--json", o.json, "JSON output");
  zgraph->add_flag("--dot", o.dot, "DOT output");

  auto* verify = app.add_subcommand("verify", "Run every check on a file, or on random instances");
  file_arg(verify, false);
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--count", o.count, "Number of random instances")->check(CLI::NonNegativeNumber);
  verify->add_flag("--all-theorems", o.all_theorems, "Run every sampled check on the given file");
  verify->add_option("--reproducers", o.reproducer_dir, "Directory for failure reproducers");
  verify->add_flag("--timing", o.timing, "Report timing");
  verify->add_flag("--json", o.json, "JSON output");

  auto* example = app.add_subcommand("example", "Generate and evaluate an example family");
  example->add_option("family", o.family, "ex41, ex42, ex43, ex44 or ex45")->required();
  example->add_option("params", o.params, "Family parameters");
  example->add_flag("--print", o.print, "Print the generated instance only");
  example->add_flag("--json", o.json, "JSON output");
  example->add_flag("--dot", o.dot, "DOT output of the z-graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*derive_cmd) return cmd_derive(o);
    if (*analyze) return cmd_analyze(o);
    if (*medial_cmd) return cmd_medial(o);
    if (*zgraph) return cmd_zgraph(o);
    if (*verify) return cmd_verify(o);
    if (*example) return cmd_example(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const TheoremFailure& e) {
    std::cerr << "theorem check failed: " << e.what() << "\n";
    return kTheorem;
  }
  return kUsage;
}
