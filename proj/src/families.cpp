#include "vgraph/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vgraph/error.hpp"
#include "vgraph/zregion.hpp"

namespace vgraph {

namespace {

std::vector<Element> dedupe(std::vector<Element> v) {
  std::vector<Element> out;
  for (Element x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

Element pair_index(int n, int a, int b) { return a * n + ((b % n) + n) % n; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

// Calls f on every voltage tuple drawn from `pool`; stops when f returns true.
template <typename F>
bool for_each_tuple(int slots, const std::vector<Element>& pool, F&& f) {
  std::vector<int> idx(slots, 0);
  std::vector<Element> tuple(slots);
  while (true) {
    for (int i = 0; i < slots; ++i) tuple[i] = pool[idx[i]];
    if (f(tuple)) return true;
    int i = slots - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(pool.size())) idx[i--] = 0;
    if (i < 0) return false;
  }
}

Instance family_instance(VoltageEmbedding ve) {
  Instance inst = make_instance(std::move(ve));
  inst.edge_names[0] = "z";
  for (size_t e = 1; e < inst.edge_names.size(); ++e) inst.edge_names[e] = "x" + std::to_string(e);
  inst.circles.push_back({"z", {0}});
  return inst;
}

}  // namespace

std::optional<VoltageEmbedding> search_one_vertex(const OneVertexSearch& search) {
  const FiniteGroup& grp = *search.group;
  std::vector<Element> everything(grp.order());
  std::iota(everything.begin(), everything.end(), 0);
  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<Element> pool = pass == 0 ? dedupe(search.candidates) : everything;
    if (pool.empty()) continue;
    for (int m = search.loops_min; m <= search.loops_max; ++m) {
      std::vector<EdgeEnds> ends(m, EdgeEnds{0, 0});
      std::vector<Dart> rest;
      for (Dart d = 1; d < 2 * m; ++d) rest.push_back(d);
      do {
        std::vector<Dart> rot{0};
        rot.insert(rot.end(), rest.begin(), rest.end());
        for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
          std::vector<int> signs{search.z_sign};
          for (int i = 1; i < m; ++i) signs.push_back((mask >> (i - 1)) & 1 ? -1 : 1);
          EmbeddedGraph g(1, ends, signs, {rot});
          if (euler_characteristic(g) != search.euler || is_orientable(g) != search.orientable) continue;
          const int zs[] = {0};
          const Circle z = circle_from_edges(g, zs, 0);
          std::optional<VoltageEmbedding> found;
          for_each_tuple(m - 1, pool, [&](const std::vector<Element>& tuple) {
            std::vector<Element> volts{search.z_voltage};
            volts.insert(volts.end(), tuple.begin(), tuple.end());
            VoltageEmbedding ve = VoltageEmbedding::from_edge_voltages(g, search.group, volts);
            const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
            if (!search.accept(ve, tvg, z)) return false;
            found.emplace(std::move(ve));
            return true;
          });
          if (found) return found;
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return std::nullopt;
}

ExampleFamily example_separating(int a, int b) {
  require(a >= 1 && b >= 1 && a <= 6 && b <= 6, "ex41 needs 1 <= a, b <= 6");
  const int n = a * b;
  const int l = std::lcm(a, b);
  const int c = l / a, d = l / b;
  GroupPtr grp = make_cyclic(n);
  // z+ x+ x- z- y+ y-: two loops nested on either side of z on the sphere.
  EmbeddedGraph g(1, {{0, 0}, {0, 0}, {0, 0}}, {1, 1, 1}, {{0, 2, 3, 1, 4, 5}});
  const Element volts[] = {0, d % n, c % n};
  ExampleFamily ex{"ex41(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   family_instance(VoltageEmbedding::from_edge_voltages(g, grp, volts)),
                   {}};
  ex.instance.edge_names = {"z", "x", "y"};
  const FaceStructure faces = trace_faces(g);
  const Circle z = instance_circle(ex.instance, ex.instance.circles.front());
  ex.instance.face_chains.push_back({"I", separating_side(g, faces, z)});
  // The side containing x must be I.
  const Skeleton si = subcomplex_skeleton(g, faces, ex.instance.face_chains.front().faces);
  if (!std::binary_search(si.edges.begin(), si.edges.end(), 1))
    ex.instance.face_chains.front().faces = complement(faces, ex.instance.face_chains.front().faces);

  const int order_d = element_order(*grp, d % n), order_c = element_order(*grp, c % n);
  FamilyExpectation& e = ex.expected;
  e.components = 1;
  e.lifted_circles = n;
  e.side_components = n / order_d;
  e.side_components_c = n / order_c;
  e.circles_per_side_component = order_d;
  e.circles_per_side_component_c = order_c;
  e.zregions = n / order_d + n / order_c;
  e.zgraph_vertices = e.zregions;
  e.zgraph_edges = n;
  e.zgraph_loops = 0;
  return ex;
}

namespace {

ExampleFamily projective(int n, bool two_regions) {
  require(n >= 1 && n <= 12, "n must lie in 1..12");
  GroupPtr grp = direct_product(make_cyclic(2), make_cyclic(n));
  const Subgroup whole = whole_group(grp);
  const Subgroup target = two_regions ? cyclic_subgroup(grp, pair_index(n, 0, 1)) : whole;
  OneVertexSearch s;
  s.group = grp;
  s.euler = 1;
  s.orientable = false;
  s.z_sign = -1;
  s.z_voltage = pair_index(n, 1, 0);
  s.candidates = {pair_index(n, 0, 0), pair_index(n, 0, 1), pair_index(n, 1, 0), pair_index(n, 1, 1)};
  s.accept = [&](const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& z) {
    if (!(local_voltage_group(ve, 0) == whole)) return false;
    const SpecialClaw claw = special_claw(tvg, ve.base(), z.traversal.front());
    return crossing_free_group(tvg, z, claw.w_tip) == target;
  };
  auto ve = search_one_vertex(s);
  const std::string id = (two_regions ? "ex42(" : "ex43(") + std::to_string(n) + ")";
  if (!ve) throw ValidationError("no base embedding found for " + id);
  ExampleFamily ex{id, family_instance(std::move(*ve)), {}};
  FamilyExpectation& e = ex.expected;
  e.components = 1;
  e.lifted_circles = n;
  e.zregions = two_regions ? 2 : 1;
  e.boundary_circles = two_regions ? n : 2 * n;
  e.zgraph_vertices = e.zregions;
  e.zgraph_edges = n;
  e.zgraph_loops = two_regions ? 0 : n;
  e.regular_degree = two_regions ? n : 2 * n;
  return ex;
}

ExampleFamily torus(int n, int d, const std::string& id) {
  GroupPtr grp = make_cyclic(n);
  const Subgroup whole = whole_group(grp);
  const Subgroup target = cyclic_subgroup(grp, d % n);
  OneVertexSearch s;
  s.group = grp;
  s.euler = 0;
  s.orientable = true;
  s.z_sign = 1;
  s.z_voltage = 0;
  s.candidates = {0, 1 % n, d % n, n - 1};
  s.accept = [&](const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& z) {
    if (!(local_voltage_group(ve, 0) == whole)) return false;
    if (is_separating(ve.base(), z)) return false;
    const SpecialClaw claw = special_claw(tvg, ve.base(), z.traversal.front());
    if (!(crossing_free_group(tvg, z, claw.w_tip) == target)) return false;
    const auto tips = crossing_free_tip_set(tvg, z, claw);
    return std::binary_search(tips.begin(), tips.end(), 1 % n);
  };
  auto ve = search_one_vertex(s);
  if (!ve) throw ValidationError("no base embedding found for " + id);
  return ExampleFamily{id, family_instance(std::move(*ve)), {}};
}

}  // namespace

ExampleFamily example_projective_two(int n) { return projective(n, true); }
ExampleFamily example_projective_one(int n) { return projective(n, false); }

ExampleFamily example_torus_many(int k, int d) {
  require(k >= 1 && k <= 4 && d >= 1 && d <= 4, "ex44 needs 1 <= k, d <= 4");
  const int n = k * d;
  ExampleFamily ex = torus(n, d, "ex44(" + std::to_string(k) + "," + std::to_string(d) + ")");
  FamilyExpectation& e = ex.expected;
  e.components = 1;
  e.lifted_circles = n;
  e.zregions = d;
  e.boundary_circles = 2 * k;
  e.zgraph_vertices = d;
  e.zgraph_edges = n;
  e.regular_degree = 2 * k;
  return ex;
}

ExampleFamily example_torus_bouquet(int n) {
  require(n >= 1 && n <= 12, "n must lie in 1..12");
  ExampleFamily ex = torus(n, 1, "ex45(" + std::to_string(n) + ")");
  FamilyExpectation& e = ex.expected;
  e.components = 1;
  e.lifted_circles = n;
  e.zregions = 1;
  e.stated_zregions = 2;
  e.boundary_circles = 2 * n;
  e.zgraph_vertices = 1;
  e.zgraph_edges = n;
  e.zgraph_loops = n;
  e.regular_degree = 2 * n;
  return ex;
}

ExampleFamily generate_example(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      throw ValidationError(family + " takes " + std::to_string(count) + " parameter" + (count == 1 ? "" : "s"));
  };
  if (family == "ex41") {
    need(2);
    return example_separating(params[0], params[1]);
  }
  if (family == "ex42") {
    need(1);
    return example_projective_two(params[0]);
  }
  if (family == "ex43") {
    need(1);
    return example_projective_one(params[0]);
  }
  if (family == "ex44") {
    need(2);
    return example_torus_many(params[0], params[1]);
  }
  if (family == "ex45") {
    need(1);
    return example_torus_bouquet(params[0]);
  }
  throw ValidationError("unknown example family '" + family + "'");
}

bool FamilyResult::ok() const {
  if (!zgraphs_equal) return false;
  return std::all_of(observations.begin(), observations.end(), [](const FamilyObservation& o) { return o.agrees(); });
}

FamilyResult evaluate_family(const ExampleFamily& ex) {
  const VoltageEmbedding& ve = ex.instance.embedding;
  const FiniteGroup& grp = ve.group();
  const DerivedEmbedding derived = derive(ve);
  const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
  const Circle z = instance_circle(ex.instance, ex.instance.circles.front());
  const FamilyExpectation& e = ex.expected;
  FamilyResult r;
  auto observe = [&](const std::string& name, int expected, int observed) {
    if (expected >= 0) r.observations.push_back({name, expected, observed});
  };

  observe("components", e.components, derived.graph().component_count());
  const CircleReport rep = check_circle(ve, derived, tvg, z, grp.identity());
  int failed = 0;
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::failed) ++failed;
    if (c.name.rfind("zgraph-", 0) == 0 && c.name != "zgraph-connected" && c.name != "zgraph-bipartite") {
      r.zgraphs_equal = c.status == CheckStatus::confirmed;
      r.zgraph_detail = c.detail;
    }
  }
  observe("failed checks", 0, failed);

  const ZRegionAnalysis za = zregions(ve, derived, z, grp.identity());
  observe("lifted circles", e.lifted_circles, static_cast<int>(za.circles.size()));
  observe("z-regions", e.zregions, region_count(za));
  if (rep.predicted_regions >= 0) observe("predicted z-regions", e.zregions, rep.predicted_regions);
  if (rep.brute) {
    const ZGraph& zg = *rep.brute;
    const auto deg = zg.degrees();
    const bool uniform = !deg.empty() && std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
    observe("z-graph vertices", e.zgraph_vertices, zg.vertex_count());
    observe("z-graph edges", e.zgraph_edges, zg.edge_count());
    observe("z-graph loops", e.zgraph_loops, zg.loop_count());
    observe("z-graph regular degree", e.regular_degree, uniform ? deg.front() : -2);
    observe("circles bounding each region", e.boundary_circles, uniform ? deg.front() : -2);
    observe("z-graph connected", 1, zg.is_connected() ? 1 : 0);
  }
  if (e.stated_zregions >= 0 && e.stated_zregions != region_count(za))
    r.notes.push_back("stated count of " + std::to_string(e.stated_zregions) + " z-regions disagrees with computed " +
                      std::to_string(region_count(za)) + " (coset prediction " +
                      std::to_string(rep.predicted_regions) + ")");

  if (!ex.instance.face_chains.empty()) {
    const FaceStructure faces = trace_faces(ve.base());
    const std::vector<int>& side = ex.instance.face_chains.front().faces;
    const std::vector<int> other = complement(faces, side);
    const CosetCountReport ri = fiber_components(ve, derived, z.base_vertex, side, z.edges, z.traversal);
    const CosetCountReport rc = fiber_components(ve, derived, z.base_vertex, other, z.edges, z.traversal);
    observe("components of (S:I) lifts", e.side_components, static_cast<int>(ri.region_components.observed));
    observe("components of (S:I^c) lifts", e.side_components_c, static_cast<int>(rc.region_components.observed));
    observe("lifts of z per (S:I) lift", e.circles_per_side_component, static_cast<int>(ri.subgraph_components.observed));
    observe("lifts of z per (S:I^c) lift", e.circles_per_side_component_c,
            static_cast<int>(rc.subgraph_components.observed));
    // Edges joining the two vertices that contain the identity correspond to
    // the intersection of the two side groups.
    if (rep.brute) {
      std::vector<Element> both;
      std::set_intersection(ri.region_group.begin(), ri.region_group.end(), rc.region_group.begin(),
                            rc.region_group.end(), std::back_inserter(both));
      int joined = 0;
      for (const auto& edge : rep.brute->edges) {
        const auto& la = rep.brute->vertices[edge.a].label;
        const auto& lb = rep.brute->vertices[edge.b].label;
        if (std::binary_search(la.begin(), la.end(), grp.identity()) &&
            std::binary_search(lb.begin(), lb.end(), grp.identity()))
          ++joined;
      }
      observe("edges joining the identity vertices", static_cast<int>(both.size()), joined);
    }
  }
  return r;
}

}  // namespace vgraph
