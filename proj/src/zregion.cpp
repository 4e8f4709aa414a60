#include "vgraph/zregion.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "union_find.hpp"
#include "vgraph/error.hpp"

namespace vgraph {

std::vector<int> ZGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

int ZGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const ZEdge& e) { return e.a == e.b; }));
}

bool ZGraph::is_connected() const {
  if (vertices.empty()) return false;
  detail::UnionFind uf(vertex_count());
  for (const auto& e : edges) uf.unite(e.a, e.b);
  int count = 0;
  uf.labels(&count);
  return count == 1;
}

bool ZGraph::is_bipartite() const {
  std::vector<int> color(vertices.size(), -1);
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    if (e.a == e.b) return false;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (int s = 0; s < vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool lambda_preserving(const EmbeddedGraph& g, std::span<const int> edges) {
  int product = 1;
  for (int e : edges) product *= g.sign(e);
  return product > 0;
}

std::vector<Element> component_elements(const VoltageEmbedding& ve, int v, Element a) {
  if (!ve.group().contains(a)) throw ValidationError("component element outside the group");
  return left_translate(ve.group(), a, local_voltage_group(ve, v).elements());
}

// Lifts of the circle found by union-find on the derived graph, restricted to
// the component of (v, a).
std::vector<LiftedCircle> lifted_circles_brute(const DerivedEmbedding& derived,
                                               const Circle& circle, std::span<const Element> component) {
  const EmbeddedGraph& dg = derived.graph();
  const int n = derived.fiber_size();
  const int v = circle.base_vertex;
  detail::UnionFind uf(dg.vertex_count());
  for (int e : circle.edges)
    for (Element b = 0; b < n; ++b) uf.unite(dg.edge(e * n + b).tail, dg.edge(e * n + b).head);
  std::set<Element> in_component(component.begin(), component.end());
  std::map<int, std::vector<Element>> labels;
  for (Element c = 0; c < n; ++c) labels[uf.find(derived.vertex(v, c))].push_back(c);
  std::map<int, std::vector<int>> edges;
  for (int e : circle.edges)
    for (Element b = 0; b < n; ++b) edges[uf.find(dg.edge(e * n + b).tail)].push_back(e * n + b);
  std::vector<LiftedCircle> out;
  for (auto& [root, label] : labels) {
    if (!in_component.count(label.front())) continue;
    for (Element c : label)
      if (!in_component.count(c)) throw TheoremFailure("a lifted circle leaves its component");
    LiftedCircle lc;
    lc.circle = circle_from_edges(dg, edges[root], derived.vertex(v, label.front()));
    lc.coset = label;
    lc.preserving = lambda_preserving(dg, lc.circle.edges);
    out.push_back(std::move(lc));
  }
  std::sort(out.begin(), out.end(), [](const LiftedCircle& x, const LiftedCircle& y) { return x.coset < y.coset; });
  return out;
}

std::string label_key(const std::string& tag, const std::vector<Element>& label) {
  std::string s = tag + "{";
  for (size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + std::to_string(label[i]);
  return s + "}";
}

std::vector<Element> subset_in_region(const ZRegionAnalysis& z, const DerivedEmbedding& derived, int base_corner,
                                      int region) {
  std::vector<Element> out;
  for (Element c : z.component)
    if (z.partition.corner_region[derived.corner(base_corner, c)] == region) out.push_back(c);
  return out;
}

// Index of the coset containing every element of `set`, or failure.
int containing_coset(const CosetPartition& part, std::span<const Element> set, const std::string& what) {
  const int i = part.coset_of(set.front());
  for (Element x : set)
    if (part.coset_of(x) != i) throw TheoremFailure(what + " is split across cosets");
  return i;
}

}  // namespace

FiberCircleSet fiber_circles(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const Circle& circle,
                             Element a) {
  const int v = circle.base_vertex;
  FiberCircleSet out;
  out.omega = net_voltage(ve, circle.traversal);
  out.component = component_elements(ve, v, a);
  for (const LiftSet& s : consecutive_lift_sets(ve, derived, circle.traversal, out.component)) {
    std::vector<int> edges;
    for (const auto& lift : s.lifts)
      for (Dart d : lift) edges.push_back(edge_of(d));
    LiftedCircle lc;
    lc.coset = s.starts;
    std::sort(lc.coset.begin(), lc.coset.end());
    lc.circle = circle_from_edges(derived.graph(), edges, derived.vertex(v, lc.coset.front()));
    lc.preserving = lambda_preserving(derived.graph(), lc.circle.edges);
    out.circles.push_back(std::move(lc));
  }
  return out;
}

bool lifts_orientation_preserving(const VoltageEmbedding& ve, const Circle& circle) {
  if (circle_orientation_type(ve.base(), circle) == OrientationType::preserving)
    throw ValidationError("base circle is orientation-preserving; its lifts always are");
  return element_order(ve.group(), net_voltage(ve, circle.traversal)) % 2 == 0;
}

ZRegionAnalysis zregions(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const Circle& circle, Element a) {
  const EmbeddedGraph& g = ve.base();
  const EmbeddedGraph& dg = derived.graph();
  const int v = circle.base_vertex;
  ZRegionAnalysis z;
  z.omega = net_voltage(ve, circle.traversal);
  z.component = component_elements(ve, v, a);
  z.circles = lifted_circles_brute(derived, circle, z.component);
  std::vector<Circle> cut;
  for (const auto& lc : z.circles) {
    if (!lc.preserving)
      throw ValidationError("lifted circles are orientation-reversing: |omega| is odd for a reversing base circle");
    cut.push_back(lc.circle);
  }
  z.partition = cut_regions(dg, cut);
  const auto comp = dg.vertex_components();
  const int home = comp[derived.vertex(v, a)];
  std::set<int> regions;
  for (int c = 0; c < dg.corner_count(); ++c)
    if (comp[dg.corner_vertex(c)] == home) regions.insert(z.partition.corner_region[c]);
  z.regions.assign(regions.begin(), regions.end());
  const Dart d1 = circle.traversal.front();
  z.w_corner = g.corner_id(v, g.slot(d1));
  z.y_corner = g.corner_id(v, g.slot(d1) - 1);
  return z;
}

int region_count(const ZRegionAnalysis& z) { return static_cast<int>(z.regions.size()); }

int predict_zregion_count(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle) {
  const SpecialClaw claw = special_claw(tvg, ve.base(), circle.traversal.front());
  return local_voltage_group(ve, circle.base_vertex).size() / crossing_free_group(tvg, circle, claw.w_tip).size();
}

ZGraph zgraph_brute_tips(const ZRegionAnalysis& z, const DerivedEmbedding& derived) {
  ZGraph out;
  std::map<int, int> index;
  for (int r : z.regions) {
    index[r] = out.vertex_count();
    out.vertices.push_back({"coset", subset_in_region(z, derived, z.w_corner, r)});
  }
  for (size_t i = 0; i < z.circles.size(); ++i)
    out.edges.push_back({index.at(z.partition.banks[i].left), index.at(z.partition.banks[i].right), z.circles[i].coset});
  return out;
}

ZGraph zgraph_brute_sides(const ZRegionAnalysis& z, const DerivedEmbedding& derived, const FaceStructure& base_faces,
                          const std::vector<int>& face_chain) {
  const std::set<int> in_i(face_chain.begin(), face_chain.end());
  const bool w_in = in_i.count(base_faces.corner_face[z.w_corner]) > 0;
  const bool y_in = in_i.count(base_faces.corner_face[z.y_corner]) > 0;
  if (w_in == y_in) throw ValidationError("the circle does not bound the face chain at its base vertex");
  const int i_corner = w_in ? z.w_corner : z.y_corner;
  const int ic_corner = w_in ? z.y_corner : z.w_corner;
  ZGraph out;
  std::map<int, int> index;
  for (int r : z.regions) {
    index[r] = out.vertex_count();
    auto li = subset_in_region(z, derived, i_corner, r);
    auto lc = subset_in_region(z, derived, ic_corner, r);
    if (!li.empty() && lc.empty()) {
      out.vertices.push_back({"I", li});
    } else if (li.empty() && !lc.empty()) {
      out.vertices.push_back({"I^c", lc});
    } else {
      li.insert(li.end(), lc.begin(), lc.end());
      std::sort(li.begin(), li.end());
      out.vertices.push_back({"mixed", li});
    }
  }
  for (size_t i = 0; i < z.circles.size(); ++i)
    out.edges.push_back({index.at(z.partition.banks[i].left), index.at(z.partition.banks[i].right), z.circles[i].coset});
  return out;
}

std::vector<int> separating_side(const EmbeddedGraph& g, const FaceStructure& faces, const Circle& circle) {
  const Circle one[] = {circle};
  const RegionPartition part = cut_regions(g, faces, one);
  const int v = circle.base_vertex;
  const int r = part.corner_region[g.corner_id(v, g.slot(circle.traversal.front()))];
  std::vector<int> out;
  for (int f = 0; f < faces.face_count(); ++f)
    if (part.face_region[f] == r) out.push_back(f);
  return out;
}

ZGraph zgraph_coset_separating(const VoltageEmbedding& ve, const Circle& circle, const std::vector<int>& face_chain,
                               Element a) {
  const EmbeddedGraph& g = ve.base();
  const int v = circle.base_vertex;
  const FaceStructure faces = trace_faces(g);
  if (boundary(g, faces, face_chain) != circle.edges)
    throw ValidationError("the face chain's boundary is not the circle");
  const FaceChain other = complement(faces, face_chain);
  const Skeleton si = subcomplex_skeleton(g, faces, face_chain);
  const Skeleton sc = subcomplex_skeleton(g, faces, other);
  for (const Skeleton* s : {&si, &sc})
    if (!s->connected || !std::binary_search(s->vertices.begin(), s->vertices.end(), v))
      throw ValidationError("both sides of the circle must have connected skeletons through the base vertex");
  const std::vector<Element> comp = component_elements(ve, v, a);
  const CosetPartition ci = left_cosets(comp, restricted_voltage_group(ve, si.edges, v));
  const CosetPartition cc = left_cosets(comp, restricted_voltage_group(ve, sc.edges, v));
  const CosetPartition cw = left_cosets(comp, cyclic_subgroup(ve.group_ptr(), net_voltage(ve, circle.traversal)));
  ZGraph out;
  for (const auto& c : ci.cosets) out.vertices.push_back({"I", c});
  for (const auto& c : cc.cosets) out.vertices.push_back({"I^c", c});
  for (const auto& c : cw.cosets)
    out.edges.push_back({containing_coset(ci, c, "an <omega>-coset"),
                         ci.size() + containing_coset(cc, c, "an <omega>-coset"), c});
  return out;
}

ZGraph zgraph_coset_reversing(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle,
                              Element a) {
  const FiniteGroup& grp = ve.group();
  if (circle_orientation_type(ve.base(), circle) != OrientationType::reversing)
    throw ValidationError("base circle is not orientation-reversing");
  const Element omega = net_voltage(ve, circle.traversal);
  if (element_order(grp, omega) % 2 != 0) throw ValidationError("|omega| is odd; lifted circles are reversing");
  const SpecialClaw claw = special_claw(tvg, ve.base(), circle.traversal.front());
  const std::vector<Element> comp = component_elements(ve, circle.base_vertex, a);
  const CosetPartition ch = left_cosets(comp, crossing_free_group(tvg, circle, claw.w_tip));
  const Subgroup w = cyclic_subgroup(ve.group_ptr(), omega);
  const Subgroup w2 = cyclic_subgroup(ve.group_ptr(), grp.mul(omega, omega));
  const CosetPartition cw = left_cosets(comp, w);
  ZGraph out;
  for (const auto& c : ch.cosets) out.vertices.push_back({"coset", c});
  for (size_t i = 0; i < cw.cosets.size(); ++i) {
    const Element d = cw.representatives[i];
    const auto end_a = left_translate(grp, d, w2.elements());
    const auto end_b = left_translate(grp, grp.mul(d, omega), w2.elements());
    out.edges.push_back({containing_coset(ch, end_a, "an edge end"), containing_coset(ch, end_b, "an edge end"),
                         cw.cosets[i]});
  }
  return out;
}

ZGraph zgraph_coset_preserving(const VoltageEmbedding& ve, const TotalVoltageGraph& tvg, const Circle& circle,
                               Element a) {
  const FiniteGroup& grp = ve.group();
  if (circle_orientation_type(ve.base(), circle) != OrientationType::preserving)
    throw ValidationError("base circle is not orientation-preserving");
  if (is_separating(ve.base(), circle)) throw ValidationError("base circle is separating");
  const SpecialClaw claw = special_claw(tvg, ve.base(), circle.traversal.front());
  const std::vector<Element> comp = component_elements(ve, circle.base_vertex, a);
  const CosetPartition ch = left_cosets(comp, crossing_free_group(tvg, circle, claw.w_tip));
  const std::vector<Element> tips = crossing_free_tip_set(tvg, circle, claw);
  std::vector<std::set<Element>> sets;
  for (Element b : ch.representatives) {
    const auto s = left_translate(grp, b, tips);
    sets.emplace_back(s.begin(), s.end());
  }
  const CosetPartition cw = left_cosets(comp, cyclic_subgroup(ve.group_ptr(), net_voltage(ve, circle.traversal)));
  ZGraph out;
  for (const auto& c : ch.cosets) out.vertices.push_back({"coset", c});
  for (const auto& c : cw.cosets) {
    std::vector<int> hits;
    for (int i = 0; i < ch.size(); ++i)
      if (sets[i].count(c.front())) hits.push_back(i);
    for (Element x : c) {
      std::vector<int> other;
      for (int i = 0; i < ch.size(); ++i)
        if (sets[i].count(x)) other.push_back(i);
      if (other != hits) throw TheoremFailure("an <omega>-coset is split between vertex sets");
    }
    if (hits.size() == 1) {
      out.edges.push_back({hits[0], hits[0], c});
    } else if (hits.size() == 2) {
      out.edges.push_back({hits[0], hits[1], c});
    } else {
      throw TheoremFailure("an <omega>-coset lies in " + std::to_string(hits.size()) + " vertex sets");
    }
  }
  return out;
}

std::optional<std::string> compare_zgraphs(const ZGraph& coset, const ZGraph& brute) {
  auto keys = [](const ZGraph& z) {
    std::vector<std::string> k;
    for (const auto& v : z.vertices) k.push_back(label_key(v.tag, v.label));
    return k;
  };
  const auto kc = keys(coset), kb = keys(brute);
  for (const auto* k : {&kc, &kb}) {
    std::set<std::string> uniq(k->begin(), k->end());
    if (uniq.size() != k->size()) return std::string("vertex labels are not distinct");
  }
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(kc) != sorted(kb)) return "vertex labels differ: " + std::to_string(kc.size()) + " vs " + std::to_string(kb.size()) + " vertices";
  auto edge_keys = [](const ZGraph& z, const std::vector<std::string>& k) {
    std::vector<std::string> out;
    for (const auto& e : z.edges) {
      std::string x = k[e.a], y = k[e.b];
      if (y < x) std::swap(x, y);
      out.push_back(label_key("edge", e.label) + " " + x + " " + y);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto ec = edge_keys(coset, kc), eb = edge_keys(brute, kb);
  if (ec.size() != eb.size()) return "edge counts differ: " + std::to_string(ec.size()) + " vs " + std::to_string(eb.size());
  for (size_t i = 0; i < ec.size(); ++i)
    if (ec[i] != eb[i]) return "edge mismatch: " + ec[i] + " vs " + eb[i];
  return std::nullopt;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::confirmed:
      return "confirmed";
    case CheckStatus::vacuous:
      return "vacuous";
    case CheckStatus::failed:
      return "FAILED";
  }
  return "?";
}

namespace {

TheoremCheck make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::confirmed : CheckStatus::failed, std::move(detail)};
}

TheoremCheck vacuous(std::string name, std::string why) { return {std::move(name), CheckStatus::vacuous, std::move(why)}; }

template <typename F>
TheoremCheck guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const TheoremFailure& e) {
    return {name, CheckStatus::failed, e.what()};
  }
}

TheoremCheck compare_check(const std::string& name, const ZGraph& coset, const ZGraph& brute) {
  const auto diff = compare_zgraphs(coset, brute);
  return make_check(name, !diff, diff ? *diff : std::to_string(coset.vertex_count()) + " vertices, " +
                                                    std::to_string(coset.edge_count()) + " edges");
}

TheoremCheck nonseparating_lifts(const DerivedEmbedding& derived, const FaceStructure& dfaces,
                                 const std::vector<LiftedCircle>& circles) {
  for (const auto& lc : circles)
    if (is_separating(derived.graph(), dfaces, lc.circle))
      return make_check("nonseparating-lifts", false,
                        "lift through fiber " + std::to_string(lc.coset.front()) + " separates");
  return make_check("nonseparating-lifts", true, std::to_string(circles.size()) + " lifts");
}

}  // namespace

CircleReport check_circle(const VoltageEmbedding& ve, const DerivedEmbedding& derived, const TotalVoltageGraph& tvg,
                          const Circle& circle, Element a) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int v = circle.base_vertex;
  const Element omega = net_voltage(ve, circle.traversal);
  const Subgroup av = local_voltage_group(ve, v);
  const std::vector<Element> comp = component_elements(ve, v, a);
  CircleReport rep;

  if (circle_orientation_type(g, circle) == OrientationType::reversing) {
    rep.kind = "reversing";
    const bool even = element_order(grp, omega) % 2 == 0;
    const auto lifts = lifted_circles_brute(derived, circle, comp);
    bool all_preserving = true;
    for (const auto& lc : lifts) all_preserving = all_preserving && lc.preserving;
    rep.checks.push_back(make_check("reversing-lift-parity", even == all_preserving,
                                    std::string("|omega| ") + (even ? "even" : "odd") + ", lifts " +
                                        (all_preserving ? "preserving" : "reversing")));
    if (!even) {
      for (const char* name : {"region-count", "reversing-regions", "nonseparating-lifts", "zgraph-reversing"})
        rep.checks.push_back(vacuous(name, "|omega| is odd"));
      return rep;
    }
    const ZRegionAnalysis z = zregions(ve, derived, circle, a);
    rep.predicted_regions = predict_zregion_count(ve, tvg, circle);
    rep.observed_regions = region_count(z);
    rep.checks.push_back(make_check("region-count", rep.predicted_regions == rep.observed_regions,
                                    "predicted " + std::to_string(rep.predicted_regions) + ", found " +
                                        std::to_string(rep.observed_regions)));
    std::vector<int> per_region;
    for (int r : z.regions) per_region.push_back(static_cast<int>(subset_in_region(z, derived, z.w_corner, r).size()));
    const bool equal = std::adjacent_find(per_region.begin(), per_region.end(), std::not_equal_to<>()) ==
                           per_region.end() &&
                       !per_region.empty() && per_region.front() > 0;
    const bool one_or_two = rep.observed_regions == 1 || rep.observed_regions == 2;
    rep.checks.push_back(make_check("reversing-regions", equal && one_or_two,
                                    std::to_string(rep.observed_regions) + " regions, " +
                                        std::to_string(per_region.empty() ? 0 : per_region.front()) +
                                        " tip lifts each"));
    if (cyclic_subgroup(ve.group_ptr(), omega) == av) {
      rep.checks.push_back(vacuous("nonseparating-lifts", "<omega> = A(v)"));
    } else {
      rep.checks.push_back(nonseparating_lifts(derived, trace_faces(derived.graph()), z.circles));
    }
    rep.brute = zgraph_brute_tips(z, derived);
    rep.checks.push_back(guarded("zgraph-reversing", [&] {
      rep.coset = zgraph_coset_reversing(ve, tvg, circle, a);
      return compare_check("zgraph-reversing", *rep.coset, *rep.brute);
    }));
    rep.checks.push_back(make_check("zgraph-connected", rep.brute->is_connected(), ""));
    return rep;
  }

  const FaceStructure faces = trace_faces(g);
  if (is_separating(g, faces, circle)) {
    rep.kind = "separating";
    const ZRegionAnalysis z = zregions(ve, derived, circle, a);
    rep.observed_regions = region_count(z);
    const std::vector<int> side = separating_side(g, faces, circle);
    const FaceChain other = complement(faces, side);
    const Skeleton si = subcomplex_skeleton(g, faces, side);
    const Skeleton sc = subcomplex_skeleton(g, faces, other);
    auto through_v = [&](const Skeleton& s) {
      return s.connected && std::binary_search(s.vertices.begin(), s.vertices.end(), v);
    };
    if (!through_v(si) || !through_v(sc)) {
      rep.checks.push_back(vacuous("region-count", "a side's skeleton is disconnected"));
      rep.checks.push_back(vacuous("zgraph-separating", "a side's skeleton is disconnected"));
      return rep;
    }
    rep.predicted_regions = av.size() / restricted_voltage_group(ve, si.edges, v).size() +
                            av.size() / restricted_voltage_group(ve, sc.edges, v).size();
    rep.checks.push_back(make_check("region-count", rep.predicted_regions == rep.observed_regions,
                                    "predicted " + std::to_string(rep.predicted_regions) + ", found " +
                                        std::to_string(rep.observed_regions)));
    rep.brute = zgraph_brute_sides(z, derived, faces, side);
    rep.checks.push_back(guarded("zgraph-separating", [&] {
      rep.coset = zgraph_coset_separating(ve, circle, side, a);
      return compare_check("zgraph-separating", *rep.coset, *rep.brute);
    }));
    rep.checks.push_back(make_check("zgraph-bipartite", rep.brute->is_bipartite(), ""));
    rep.checks.push_back(make_check("zgraph-connected", rep.brute->is_connected(), ""));
    return rep;
  }

  rep.kind = "preserving";
  const ZRegionAnalysis z = zregions(ve, derived, circle, a);
  rep.predicted_regions = predict_zregion_count(ve, tvg, circle);
  rep.observed_regions = region_count(z);
  rep.checks.push_back(make_check("region-count", rep.predicted_regions == rep.observed_regions,
                                  "predicted " + std::to_string(rep.predicted_regions) + ", found " +
                                      std::to_string(rep.observed_regions)));
  rep.brute = zgraph_brute_tips(z, derived);
  bool touches = true;
  for (int r : z.regions)
    touches = touches && !subset_in_region(z, derived, z.w_corner, r).empty() &&
              !subset_in_region(z, derived, z.y_corner, r).empty();
  bool even = true;
  if (rep.observed_regions > 1)
    for (int d : rep.brute->degrees()) even = even && d % 2 == 0;
  rep.checks.push_back(make_check("preserving-regions", touches && even,
                                  std::string(touches ? "every region meets both tip fibers" : "a region misses a tip fiber") +
                                      (even ? "" : "; odd boundary count")));
  rep.checks.push_back(nonseparating_lifts(derived, trace_faces(derived.graph()), z.circles));
  rep.checks.push_back(guarded("zgraph-preserving", [&] {
    rep.coset = zgraph_coset_preserving(ve, tvg, circle, a);
    return compare_check("zgraph-preserving", *rep.coset, *rep.brute);
  }));
  rep.checks.push_back(make_check("zgraph-connected", rep.brute->is_connected(), ""));
  return rep;
}

}  // namespace vgraph
