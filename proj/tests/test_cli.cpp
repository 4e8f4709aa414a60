#include <gtest/gtest.h>

#include <numeric>

#include "vgraph/emit.hpp"
#include "vgraph/error.hpp"
#include "vgraph/families.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"

namespace vgraph {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceTest, MinimalLoopParses) {
  const Instance inst = parse_instance(
      "group cyclic 2\n"
      "vertices 1\n"
      "edge a 0 0 sign=- voltage=1  # a twisted loop\n"
      "rotation 0: a+ a-\n");
  EXPECT_EQ(inst.embedding.base().edge_count(), 1);
  EXPECT_EQ(inst.embedding.base().sign(0), -1);
  EXPECT_EQ(inst.edge_index("a"), 0);
  EXPECT_EQ(inst.edge_index("b"), -1);
}

TEST(InstanceTest, DiagnosticsCarryLineNumbers) {
  const std::string head = "group cyclic 3\nvertices 1\nedge a 0 0 sign=+ voltage=1\n";
  EXPECT_NE(error_of(head + "rotation 0: a+ a+ a-\n").find("line 4"), std::string::npos);
  EXPECT_NE(error_of(head + "rotation 0: a+ b-\n").find("unknown edge 'b'"), std::string::npos);
  EXPECT_NE(error_of(head + "rotation 0: a+\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("group cyclic 3\nvertices 1\nedge a 0 0 sign=+ voltage=1 inverse=1\nrotation 0: a+ a-\n")
                .find("line 3"),
            std::string::npos);
  EXPECT_NE(error_of("group cyclic 3\nvertices 1\nedge a 0 0 sign=+ voltage=7\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("group frobnicate 3\n").find("line 1"), std::string::npos);
}

TEST(InstanceTest, CatalogRoundTrips) {
  for (const auto& entry : builtin_catalog()) {
    SCOPED_TRACE(entry.name);
    const Instance a = parse_instance(entry.text);
    const std::string printed = print_instance(a);
    const Instance b = parse_instance(printed);
    EXPECT_EQ(print_instance(b), printed);
    EXPECT_EQ(a.embedding.voltages(), b.embedding.voltages());
    EXPECT_EQ(a.embedding.base().signs(), b.embedding.base().signs());
    for (int v = 0; v < a.embedding.base().vertex_count(); ++v)
      EXPECT_EQ(a.embedding.base().rotation(v), b.embedding.base().rotation(v));
  }
}

TEST(InstanceTest, TableGroupsRoundTrip) {
  const std::string text =
      "group table 4\n"
      "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"
      "vertices 1\n"
      "edge a 0 0 sign=+ voltage=1\n"
      "edge b 0 0 sign=- voltage=2\n"
      "rotation 0: a+ b+ a- b-\n"
      "circle both: a\n";
  const Instance inst = parse_instance(text);
  EXPECT_EQ(inst.embedding.group().order(), 4);
  EXPECT_EQ(print_instance(parse_instance(print_instance(inst))), print_instance(inst));
  EXPECT_EQ(parse_edge_list(inst, "a,b"), (std::vector<int>{0, 1}));
}

TEST(FamilyTest, SeparatingExampleSignature) {
  const ExampleFamily ex = generate_example("ex41", {2, 3});
  EXPECT_EQ(ex.expected.side_components, 2);
  EXPECT_EQ(ex.expected.circles_per_side_component, 3);
  const FamilyResult r = evaluate_family(ex);
  EXPECT_TRUE(r.ok());
  for (const auto& o : r.observations) EXPECT_TRUE(o.agrees()) << o.name;
}

TEST(FamilyTest, ProjectiveExamples) {
  for (int n = 1; n <= 4; ++n) {
    const FamilyResult two = evaluate_family(example_projective_two(n));
    EXPECT_TRUE(two.ok()) << n;
    const FamilyResult one = evaluate_family(example_projective_one(n));
    EXPECT_TRUE(one.ok()) << n;
  }
}

TEST(FamilyTest, TorusExamples) {
  const ExampleFamily ex = example_torus_many(2, 2);
  const FamilyResult r = evaluate_family(ex);
  EXPECT_TRUE(r.ok());
  const FamilyResult b = evaluate_family(example_torus_bouquet(3));
  EXPECT_TRUE(b.ok());
  ASSERT_EQ(b.notes.size(), 1u);
  EXPECT_NE(b.notes[0].find("stated count of 2"), std::string::npos);
}

TEST(FamilyTest, RejectsBadParameters) {
  EXPECT_THROW(generate_example("ex41", {7, 1}), ValidationError);
  EXPECT_THROW(generate_example("ex42", {}), ValidationError);
  EXPECT_THROW(generate_example("ex46", {1}), ValidationError);
}

TEST(FuzzTest, SameSeedSameReport) {
  const std::string a = fuzz_report_json(fuzz(3, 25)).dump();
  const std::string b = fuzz_report_json(fuzz(3, 25)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, fuzz_report_json(fuzz(4, 25)).dump());
}

TEST(FuzzTest, EmptyRun) {
  const FuzzReport r = fuzz(1, 0);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.instances.empty());
}

TEST(FuzzTest, RandomEmbeddingsRespectCaps) {
  const FuzzCaps caps;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(instance_seed(9, i));
    const VoltageEmbedding ve = random_embedding(rng, caps);
    EXPECT_LE(ve.base().vertex_count(), caps.max_vertices);
    EXPECT_LE(ve.base().edge_count(), caps.max_edges);
    EXPECT_TRUE(ve.base().is_connected());
    EXPECT_LE(ve.group().order(), std::max(caps.max_cyclic, 2 * caps.max_product));
  }
}

TEST(FuzzTest, FailuresCarryReproducer) {
  FuzzInstanceReport r;
  r.checks.push_back({"x", CheckStatus::vacuous, ""});
  EXPECT_FALSE(r.failed());
  r.checks.push_back({"y", CheckStatus::failed, ""});
  EXPECT_TRUE(r.failed());
  const FuzzReport one = fuzz(5, 3);
  for (const auto& i : one.instances) EXPECT_TRUE(i.reproducer.empty());
}

TEST(EmitTest, DotForBouquetAndParallelEdges) {
  const GroupPtr z3 = make_cyclic(3);
  const ZGraph bouquet{{{"coset", {0, 1, 2}}}, {{0, 0, {0}}, {0, 0, {1}}}};
  const std::string dot = emit_dot(bouquet, *z3);
  EXPECT_EQ(dot,
            "graph \"zgraph\" {\n"
            "  v0 [label=\"coset {0 1 2}\"];\n"
            "  v0 -- v0 [label=\"{0}\"];\n"
            "  v0 -- v0 [label=\"{1}\"];\n"
            "}\n");
  const ZGraph parallel{{{"I", {0}}, {"I^c", {0}}}, {{0, 1, {0}}, {0, 1, {1}}, {0, 1, {2}}}};
  const std::string p = emit_dot(parallel, *z3);
  int lines = 0;
  for (size_t at = p.find(" -- "); at != std::string::npos; at = p.find(" -- ", at + 1)) ++lines;
  EXPECT_EQ(lines, 3);
}

TEST(EmitTest, JsonShapes) {
  const GroupPtr z2 = make_cyclic(2);
  const ZGraph g{{{"coset", {0}}, {"coset", {1}}}, {{0, 1, {0, 1}}}};
  const nlohmann::json j = zgraph_json(g, *z2);
  EXPECT_EQ(j["vertices"].size(), 2u);
  EXPECT_EQ(j["edges"][0]["label"], nlohmann::json::array({"0", "1"}));
  EXPECT_TRUE(j["bipartite"].get<bool>());
  const nlohmann::json f = fuzz_report_json(fuzz(2, 2));
  EXPECT_FALSE(f.contains("seconds"));
  EXPECT_TRUE(fuzz_report_json(fuzz(2, 2), true).contains("seconds"));
}

}  // namespace
}  // namespace vgraph
