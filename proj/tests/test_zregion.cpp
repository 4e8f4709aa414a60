#include "vgraph/zregion.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "vgraph/error.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"

namespace vgraph {
namespace {

struct Components {
  std::vector<int> of;
  int count = 0;
};

// Connected components of a graph on n nodes given as an edge list.
Components components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Components c{std::vector<int>(n, -1), 0};
  for (int s = 0; s < n; ++s) {
    if (c.of[s] >= 0) continue;
    std::vector<int> stack{s};
    c.of[s] = c.count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (c.of[y] < 0) c.of[y] = c.count, stack.push_back(y);
    }
    ++c.count;
  }
  return c;
}

struct CutOracle {
  int regions = 0;
  int circles = 0;
  std::vector<int> negative_edges;  // per lifted circle
};

// Regions: derived faces in the component of (v, a), joined across derived
// edges that are not lifts of the circle. Circles: components of the lifted
// circle edges in that component.
CutOracle cut_oracle(const VoltageEmbedding& ve, const DerivedEmbedding& d, const Circle& c, Element a) {
  const EmbeddedGraph& g = d.graph();
  const int n = ve.group().order();
  std::vector<std::pair<int, int>> all;
  for (int e = 0; e < g.edge_count(); ++e) all.push_back({g.edge(e).tail, g.edge(e).head});
  const Components vc = components(g.vertex_count(), all);
  const int target = vc.of[d.vertex(c.base_vertex, a)];

  std::vector<char> on_circle(g.edge_count(), 0);
  for (int e : c.edges)
    for (Element b = 0; b < n; ++b) on_circle[e * n + b] = 1;

  const FaceStructure fs = trace_faces(g);
  std::vector<std::vector<int>> faces_of_edge(g.edge_count());
  std::vector<int> face_comp(fs.face_count());
  for (int f = 0; f < fs.face_count(); ++f) {
    face_comp[f] = vc.of[g.tail(fs.faces[f].darts.front())];
    for (Dart x : fs.faces[f].darts) faces_of_edge[edge_of(x)].push_back(f);
  }
  std::vector<std::pair<int, int>> dual;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!on_circle[e]) dual.push_back({faces_of_edge[e][0], faces_of_edge[e][1]});
  const Components fc = components(fs.face_count(), dual);
  std::vector<char> seen(fc.count, 0);
  CutOracle out;
  for (int f = 0; f < fs.face_count(); ++f)
    if (face_comp[f] == target && !seen[fc.of[f]]) seen[fc.of[f]] = 1, ++out.regions;

  std::vector<std::pair<int, int>> lifted;
  for (int e = 0; e < g.edge_count(); ++e)
    if (on_circle[e]) lifted.push_back({g.edge(e).tail, g.edge(e).head});
  const Components lc = components(g.vertex_count(), lifted);
  std::vector<int> index(lc.count, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!on_circle[e] || vc.of[g.edge(e).tail] != target) continue;
    int& i = index[lc.of[g.edge(e).tail]];
    if (i < 0) i = out.circles++, out.negative_edges.push_back(0);
    out.negative_edges[i] += g.sign(e) < 0;
  }
  return out;
}

TEST(ZGraphTest, DegreesLoopsAndShape) {
  ZGraph bouquet{{{"coset", {0}}}, {{0, 0, {0}}, {0, 0, {1}}}};
  EXPECT_EQ(bouquet.degrees(), (std::vector<int>{4}));
  EXPECT_EQ(bouquet.loop_count(), 2);
  EXPECT_TRUE(bouquet.is_connected());
  EXPECT_FALSE(bouquet.is_bipartite());

  ZGraph parallel{{{"I", {0}}, {"I^c", {1}}}, {{0, 1, {0}}, {0, 1, {1}}, {0, 1, {2}}}};
  EXPECT_EQ(parallel.degrees(), (std::vector<int>{3, 3}));
  EXPECT_TRUE(parallel.is_bipartite());

  ZGraph split{{{"coset", {0}}, {"coset", {1}}}, {}};
  EXPECT_FALSE(split.is_connected());
}

TEST(ZGraphTest, CompareDetectsLabelChanges) {
  const ZGraph a{{{"coset", {0, 2}}, {"coset", {1, 3}}}, {{0, 1, {0}}, {1, 0, {1}}}};
  ZGraph b{{{"coset", {1, 3}}, {"coset", {0, 2}}}, {{0, 1, {1}}, {1, 0, {0}}}};
  EXPECT_FALSE(compare_zgraphs(a, b).has_value());
  b.edges[0].label = {2};
  EXPECT_TRUE(compare_zgraphs(a, b).has_value());
  ZGraph c = a;
  c.edges[1] = {0, 0, {1}};
  EXPECT_TRUE(compare_zgraphs(a, c).has_value());
}

TEST(ZRegionTest, RegionsAndCirclesMatchDirectCut) {
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    std::mt19937_64 rng(instance_seed(31, i));
    const VoltageEmbedding ve = random_embedding(rng, FuzzCaps{});
    const DerivedEmbedding d = derive(ve);
    for (const Circle& c : enumerate_circles(ve.base())) {
      const Element omega = net_voltage(ve, c.traversal);
      const bool reversing = circle_orientation_type(ve.base(), c) == OrientationType::reversing;
      const bool even = element_order(ve.group(), omega) % 2 == 0;
      const Element a = static_cast<Element>(rng() % ve.group().order());
      const CutOracle oracle = cut_oracle(ve, d, c, a);
      for (int neg : oracle.negative_edges) EXPECT_EQ(neg % 2 == 0, !reversing || even);
      if (reversing) {
        EXPECT_EQ(lifts_orientation_preserving(ve, c), even);
      }
      if (reversing && !even) continue;
      const ZRegionAnalysis z = zregions(ve, d, c, a);
      EXPECT_EQ(region_count(z), oracle.regions);
      EXPECT_EQ(static_cast<int>(z.circles.size()), oracle.circles);
      EXPECT_EQ(oracle.circles * element_order(ve.group(), omega), local_voltage_group(ve, c.base_vertex).size());
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(ZRegionTest, IdentityVoltagesGiveCopies) {
  // Every lift of a separating circle under trivial voltages cuts its copy in two.
  const Instance inst = catalog_instance("sphere-theta");
  const VoltageEmbedding ve = VoltageEmbedding::from_edge_voltages(inst.embedding.base(), make_cyclic(3),
                                                                   std::vector<Element>{0, 0, 0});
  const DerivedEmbedding d = derive(ve);
  const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
  const Circle c = instance_circle(inst, inst.circles.front());
  for (Element a = 0; a < 3; ++a) {
    const CircleReport rep = check_circle(ve, d, tvg, c, a);
    EXPECT_EQ(rep.kind, "separating");
    EXPECT_EQ(rep.observed_regions, 2);
    ASSERT_TRUE(rep.coset.has_value());
    EXPECT_EQ(rep.coset->vertex_count(), 2);
    EXPECT_EQ(rep.coset->edge_count(), 1);
    EXPECT_EQ(rep.coset->edges[0].label, (std::vector<Element>{a}));
  }
}

TEST(ZRegionTest, ProjectiveLoopLiftsToOneCircle) {
  // The Z_2 double cover of the projective plane is the sphere; the loop's
  // two lifts join into one equator that cuts it into two discs.
  const Instance inst = catalog_instance("projective-loop");
  const VoltageEmbedding& ve = inst.embedding;
  const DerivedEmbedding d = derive(ve);
  const Circle c = instance_circle(inst, inst.circles.front());
  EXPECT_TRUE(lifts_orientation_preserving(ve, c));
  const CircleReport rep = check_circle(ve, d, total_graph_with_voltages(ve), c, 0);
  EXPECT_EQ(rep.kind, "reversing");
  EXPECT_EQ(rep.observed_regions, 2);
  EXPECT_EQ(rep.predicted_regions, 2);
  for (const auto& check : rep.checks) EXPECT_NE(check.status, CheckStatus::failed) << check.name << check.detail;
}

TEST(ZRegionTest, OddReversingCircleIsVacuous) {
  const GroupPtr z3 = make_cyclic(3);
  const Instance inst = catalog_instance("projective-loop");
  const VoltageEmbedding ve =
      VoltageEmbedding::from_edge_voltages(inst.embedding.base(), z3, std::vector<Element>{1});
  const Circle c = instance_circle(inst, inst.circles.front());
  EXPECT_FALSE(lifts_orientation_preserving(ve, c));
  const CircleReport rep = check_circle(ve, derive(ve), total_graph_with_voltages(ve), c, 0);
  ASSERT_FALSE(rep.checks.empty());
  EXPECT_EQ(rep.checks.front().status, CheckStatus::confirmed);
  for (size_t i = 1; i < rep.checks.size(); ++i) EXPECT_EQ(rep.checks[i].status, CheckStatus::vacuous);
  EXPECT_THROW(zregions(ve, derive(ve), c, 0), ValidationError);
}

TEST(ZRegionTest, FiberCirclesFollowCosetsOfOmega) {
  const Instance inst = catalog_instance("torus-bouquet");
  const VoltageEmbedding& ve = inst.embedding;  // Z_4, a = 1, b = 2
  const DerivedEmbedding d = derive(ve);
  const std::vector<int> b{1};
  const Circle c = circle_from_edges(ve.base(), b, 0);
  const FiberCircleSet set = fiber_circles(ve, d, c, 0);
  EXPECT_EQ(set.omega, 2);
  ASSERT_EQ(set.circles.size(), 2u);
  EXPECT_EQ(set.circles[0].coset, (std::vector<Element>{0, 2}));
  EXPECT_EQ(set.circles[1].coset, (std::vector<Element>{1, 3}));
  for (const auto& lc : set.circles) EXPECT_EQ(lc.circle.length(), 2);
}

}  // namespace
}  // namespace vgraph
