#include "vgraph/medial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "vgraph/error.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"

namespace vgraph {
namespace {

VoltageEmbedding catalog(const std::string& name) { return catalog_instance(name).embedding; }

TEST(MedialTest, ThetaMedialIsOctahedronLike) {
  const MedialEmbedding m = medial(catalog("sphere-theta").base());
  EXPECT_EQ(m.graph.vertex_count(), 3);
  EXPECT_EQ(m.graph.edge_count(), 6);
  EXPECT_EQ(trace_faces(m.graph).face_count(), 5);
  EXPECT_EQ(euler_characteristic(m.graph), 2);
  int vertex_faces = 0;
  for (bool b : m.vertex_face) vertex_faces += b;
  EXPECT_EQ(vertex_faces, 2);
}

TEST(MedialTest, MedialKeepsSurfaceAndIsFourRegular) {
  for (const auto& entry : builtin_catalog()) {
    SCOPED_TRACE(entry.name);
    const EmbeddedGraph g = parse_instance(entry.text).embedding.base();
    const MedialEmbedding m = medial(g);
    EXPECT_EQ(m.graph.vertex_count(), g.edge_count());
    for (int x = 0; x < m.graph.vertex_count(); ++x) EXPECT_EQ(m.graph.degree(x), 4);
    EXPECT_EQ(trace_faces(m.graph).face_count(), g.vertex_count() + trace_faces(g).face_count());
    EXPECT_EQ(euler_characteristic(m.graph), euler_characteristic(g));
    EXPECT_EQ(is_orientable(m.graph), is_orientable(g));
    const EmbeddedGraph sub = subdivided_medial(g);
    EXPECT_EQ(sub.vertex_count(), g.edge_count() + g.corner_count());
    EXPECT_EQ(euler_characteristic(sub), euler_characteristic(g));
  }
}

TEST(MedialTest, TorusBouquetMedial) {
  const MedialEmbedding m = medial(catalog("torus-bouquet").base());
  EXPECT_EQ(m.graph.vertex_count(), 2);
  EXPECT_EQ(m.graph.edge_count(), 4);
  EXPECT_EQ(trace_faces(m.graph).face_count(), 2);
}

TEST(MedialTest, DerivedMedialMatchesMedialOfDerived) {
  for (const auto& entry : builtin_catalog()) EXPECT_NO_THROW(verify_derived_medial(parse_instance(entry.text).embedding));
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng(instance_seed(21, i));
    const VoltageEmbedding ve = random_embedding(rng, FuzzCaps{});
    EXPECT_NO_THROW(verify_derived_medial(ve));
  }
}

TEST(MedialTest, WrongCorrespondenceIsRejected) {
  const VoltageEmbedding ve = catalog("sphere-theta");
  const DerivedEmbedding left = derive(transferred_voltages(ve));
  const EmbeddedGraph right = subdivided_medial(derive(ve).graph());
  EmbeddingMap map = derived_medial_map(ve);
  EXPECT_TRUE(is_embedding_isomorphism(left.graph(), right, map));
  std::swap(map.vertices[0], map.vertices[1]);
  EXPECT_FALSE(is_embedding_isomorphism(left.graph(), right, map));
}

TEST(MedialTest, TotalGraphProjectsVoltages) {
  for (int i = 0; i < 30; ++i) {
    std::mt19937_64 rng(instance_seed(22, i));
    const VoltageEmbedding ve = random_embedding(rng, FuzzCaps{});
    const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
    EXPECT_TRUE(psi_preserves_voltages(tvg));
    const EmbeddedGraph& g = ve.base();
    EXPECT_EQ(tvg.total.base().vertex_count(), g.vertex_count() + g.edge_count() + g.corner_count());
    for (Dart d = 0; d < g.dart_count(); ++d) {
      const SpecialClaw claw = special_claw(tvg, g, d);
      EXPECT_TRUE(claw_is_trivial(tvg, claw));
      EXPECT_EQ(claw.base_vertex, g.tail(d));
    }
  }
}

TEST(MedialTest, TransferredVoltagesAreCohomologous) {
  // Either choice of preferred dart yields the same derived medial graph.
  const VoltageEmbedding ve = catalog("klein-bouquet");
  const DerivedEmbedding a = derive(transferred_voltages(ve));
  const DerivedEmbedding b = derive(transferred_voltages(ve, {true, false}));
  EXPECT_EQ(a.graph().component_count(), b.graph().component_count());
  EXPECT_EQ(euler_characteristic(a.graph()), euler_characteristic(b.graph()));
  EXPECT_EQ(trace_faces(a.graph()).face_count(), trace_faces(b.graph()).face_count());
}

TEST(MedialTest, CrossingFreeGroupOnBouquet) {
  // Torus bouquet over Z_4 with z = a (voltage 1): z lifts to a single
  // nonseparating circle, so the cut surface is one region and the
  // crossing-free group must be all of Z_4.
  const VoltageEmbedding ve = catalog("torus-bouquet");
  const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
  const std::vector<int> z{0};
  const Circle c = circle_from_edges(ve.base(), z, 0);
  const SpecialClaw claw = special_claw(tvg, ve.base(), c.traversal.front());
  const Subgroup h = crossing_free_group(tvg, c, claw.w_tip);
  EXPECT_EQ(h.size(), 4);
  EXPECT_THROW(crossing_free_group(tvg, c, 0), ValidationError);
}

}  // namespace
}  // namespace vgraph
