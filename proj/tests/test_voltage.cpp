#include "vgraph/voltage.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "vgraph/error.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"

namespace vgraph {
namespace {

VoltageEmbedding catalog(const std::string& name) { return catalog_instance(name).embedding; }

// Components of the derived graph by search over (v, a) pairs, built
// directly from the voltage rule (t, a) -- (h, a * voltage).
std::vector<int> explicit_components(const VoltageEmbedding& ve, int* count) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();
  const int n = grp.order();
  std::vector<std::vector<int>> adj(g.vertex_count() * n);
  for (int e = 0; e < g.edge_count(); ++e)
    for (Element a = 0; a < n; ++a) {
      const int x = g.edge(e).tail * n + a, y = g.edge(e).head * n + grp.mul(a, ve.voltage(2 * e));
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  std::vector<int> comp(adj.size(), -1);
  *count = 0;
  for (size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = *count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] < 0) comp[y] = *count, stack.push_back(y);
    }
    ++*count;
  }
  return comp;
}

std::vector<VoltageEmbedding> random_embeddings(std::uint64_t seed, int count) {
  std::vector<VoltageEmbedding> out;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(instance_seed(seed, i));
    out.push_back(random_embedding(rng, FuzzCaps{}));
  }
  return out;
}

TEST(VoltageTest, RejectsNonInverseDarts) {
  const EmbeddedGraph g(1, {{0, 0}}, {1}, {{0, 1}});
  EXPECT_NO_THROW(VoltageEmbedding(g, make_cyclic(5), {2, 3}));
  EXPECT_THROW(VoltageEmbedding(g, make_cyclic(5), {2, 2}), ValidationError);
  EXPECT_THROW(VoltageEmbedding(g, make_cyclic(5), {2}), ValidationError);
  const std::vector<Element> out_of_range{7};
  EXPECT_THROW(VoltageEmbedding::from_edge_voltages(g, make_cyclic(5), out_of_range), ValidationError);
}

TEST(VoltageTest, NetVoltageOfWalks) {
  const VoltageEmbedding ve = catalog("sphere-theta");
  const std::vector<Dart> w{0, 3, 4, 1};  // a+ b- c+ a-
  EXPECT_TRUE(is_closed_walk(ve.base(), w, 0));
  EXPECT_EQ(net_voltage(ve, w), (0 + 2 + 2 + 0) % 3);
  const std::vector<Dart> broken{0, 2};
  EXPECT_FALSE(is_walk(ve.base(), broken));
  EXPECT_THROW(net_voltage(ve, broken), ValidationError);
}

TEST(VoltageTest, ProjectivePlaneOverZ2IsSphere) {
  const DerivedEmbedding d = derive(catalog("projective-loop"));
  EXPECT_EQ(d.graph().vertex_count(), 2);
  EXPECT_EQ(d.graph().edge_count(), 2);
  EXPECT_EQ(euler_characteristic(d.graph()), 2);
  EXPECT_TRUE(is_orientable(d.graph()));
}

TEST(VoltageTest, TorusCoverIsTorus) {
  const GroupPtr z2 = make_cyclic(2);
  const std::vector<Element> volts{1, 0};
  const VoltageEmbedding ve =
      VoltageEmbedding::from_edge_voltages(catalog("torus-bouquet").base(), z2, volts);
  const DerivedEmbedding d = derive(ve);
  EXPECT_EQ(euler_characteristic(d.graph()), 0);
  EXPECT_TRUE(is_orientable(d.graph()));
  EXPECT_TRUE(d.graph().is_connected());
}

TEST(VoltageTest, KleinBottleDoubleCover) {
  // Z_2 x Z_2 voltages (1,0), (0,1) on the two crosscaps.
  const DerivedEmbedding d = derive(catalog("klein-bouquet"));
  EXPECT_EQ(d.graph().vertex_count(), 4);
  EXPECT_EQ(euler_characteristic(d.graph()), 0);
}

TEST(VoltageTest, DerivedEdgesFollowTheVoltageRule) {
  for (const VoltageEmbedding& ve : random_embeddings(11, 60)) {
    const DerivedEmbedding d = derive(ve);
    const FiniteGroup& grp = ve.group();
    const int n = grp.order();
    std::multiset<std::pair<int, int>> want, got;
    for (int e = 0; e < ve.base().edge_count(); ++e)
      for (Element a = 0; a < n; ++a)
        want.insert({ve.base().edge(e).tail * n + a, ve.base().edge(e).head * n + grp.mul(a, ve.voltage(2 * e))});
    for (int e = 0; e < d.graph().edge_count(); ++e) got.insert({d.graph().edge(e).tail, d.graph().edge(e).head});
    EXPECT_EQ(got, want);
    for (int e = 0; e < d.graph().edge_count(); ++e) EXPECT_EQ(d.graph().sign(e), ve.base().sign(e / n));
  }
}

TEST(VoltageTest, ComponentsMatchCosetsOfLocalGroup) {
  for (const VoltageEmbedding& ve : random_embeddings(12, 80)) {
    const DerivedEmbedding d = derive(ve);
    int count = 0;
    const std::vector<int> comp = explicit_components(ve, &count);
    const int n = ve.group().order();
    EXPECT_EQ(component_count(ve, d).predicted, count);
    EXPECT_EQ(count * local_voltage_group(ve, 0).size(), n);
    for (int v = 0; v < ve.base().vertex_count(); ++v)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) EXPECT_EQ(same_component(ve, v, a, b), comp[v * n + a] == comp[v * n + b]);
  }
}

TEST(VoltageTest, BouquetLocalGroupIsGeneratedByLoopVoltages) {
  const GroupPtr z12 = make_cyclic(12);
  const EmbeddedGraph g = catalog("torus-bouquet").base();
  const std::vector<Element> volts{4, 6};
  const VoltageEmbedding ve = VoltageEmbedding::from_edge_voltages(g, z12, volts);
  EXPECT_EQ(local_voltage_group(ve, 0).elements(), (std::vector<Element>{0, 2, 4, 6, 8, 10}));
  const std::vector<int> only_a{0};
  EXPECT_EQ(restricted_voltage_group(ve, only_a, 0).elements(), (std::vector<Element>{0, 4, 8}));
}

TEST(VoltageTest, FaceLiftPredictionMatchesTracing) {
  for (const VoltageEmbedding& ve : random_embeddings(13, 80)) {
    const FaceLiftPrediction p = face_lift_prediction(ve);
    const DerivedEmbedding d = derive(ve);
    const long n = ve.group().order();
    const FaceStructure base = trace_faces(ve.base());
    long faces = 0;
    for (const FaceWalk& f : base.faces) {
      const Element w = net_voltage(ve, f.darts);
      faces += n / element_order(ve.group(), w);
    }
    EXPECT_EQ(p.faces, faces);
    EXPECT_EQ(p.faces, trace_faces(d.graph()).face_count());
    EXPECT_EQ(p.euler, euler_characteristic(d.graph()));
    EXPECT_EQ(p.euler, n * (ve.base().vertex_count() - ve.base().edge_count()) + faces);
  }
}

TEST(VoltageTest, LocalModificationGivesIsomorphicCover) {
  const VoltageEmbedding ve = catalog("sphere-theta");
  const VoltageEmbedding mod = local_voltage_modification(ve, 0, 1);
  EXPECT_EQ(mod.voltage(0), 1);
  EXPECT_EQ(mod.voltage(1), 2);
  const EmbeddingMap witness = local_modification_witness(ve, 0, 1);
  std::string why;
  EXPECT_TRUE(is_embedding_isomorphism(derive(ve).graph(), derive(mod).graph(), witness, &why)) << why;

  EmbeddingMap broken = witness;
  std::swap(broken.vertices[0], broken.vertices[1]);
  EXPECT_FALSE(is_embedding_isomorphism(derive(ve).graph(), derive(mod).graph(), broken));
  EXPECT_THROW(local_voltage_modification(catalog("torus-bouquet"), 0, 1), ValidationError);
}

TEST(VoltageTest, SubdivisionGivesIsomorphicCover) {
  for (const VoltageEmbedding& ve : random_embeddings(14, 40)) {
    const int e = ve.base().edge_count() - 1;
    std::string why;
    EXPECT_TRUE(is_embedding_isomorphism(subdivide_lifts(derive(ve), e), derive(subdivide_voltage(ve, e)).graph(),
                                         subdivision_witness(ve, e), &why))
        << why;
  }
}

TEST(VoltageTest, ProductLiftMultipliesComponents) {
  for (const auto& entry : builtin_catalog()) {
    const VoltageEmbedding ve = parse_instance(entry.text).embedding;
    const int base = derive(ve).graph().component_count();
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(derive(lift_to_product(ve, n)).graph().component_count(), n * base);
  }
}

TEST(VoltageTest, CosetCountsOnSeparatingExample) {
  // One vertex on the sphere: z bounds a disc holding x (voltage 2) and one
  // holding y (voltage 3), over Z_6.
  const EmbeddedGraph g(1, {{0, 0}, {0, 0}, {0, 0}}, {1, 1, 1}, {{0, 2, 3, 1, 4, 5}});
  const std::vector<Element> volts{0, 2, 3};
  const VoltageEmbedding ve = VoltageEmbedding::from_edge_voltages(g, make_cyclic(6), volts);
  const DerivedEmbedding d = derive(ve);
  const FaceStructure fs = trace_faces(g);
  ASSERT_EQ(fs.face_count(), 4);
  // The side of z containing x: faces whose boundary avoids y.
  std::vector<int> side;
  for (int f = 0; f < fs.face_count(); ++f) {
    bool has_y = false;
    for (Dart x : fs.faces[f].darts) has_y = has_y || edge_of(x) == 2;
    if (!has_y) side.push_back(f);
  }
  const std::vector<int> z{0};
  const std::vector<Dart> walk{0};
  const CosetCountReport r = fiber_components(ve, d, 0, side, z, walk);
  EXPECT_EQ(r.region_group, (std::vector<Element>{0, 2, 4}));
  EXPECT_EQ(r.components.observed, 1);
  EXPECT_EQ(r.region_components.observed, 2);
  EXPECT_EQ(r.subgraph_components.observed, 3);
  EXPECT_EQ(r.lift_sets.observed, 1);
}

}  // namespace
}  // namespace vgraph
