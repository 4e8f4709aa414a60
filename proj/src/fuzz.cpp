#include "vgraph/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "union_find.hpp"
#include "vgraph/error.hpp"
#include "vgraph/instance.hpp"
#include "vgraph/medial.hpp"

namespace vgraph {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

TheoremCheck check(const std::string& name, bool ok, std::string detail = {}) {
  return {name, ok ? CheckStatus::confirmed : CheckStatus::failed, std::move(detail)};
}

// Runs f, turning exceptions into a failed check.
void run(std::vector<TheoremCheck>& out, const std::string& name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    out.push_back({name, CheckStatus::failed, e.what()});
  }
}

void check_face_lift(const VoltageEmbedding& ve, const DerivedEmbedding& derived, std::vector<TheoremCheck>& out) {
  const FaceLiftPrediction p = face_lift_prediction(ve);
  const EmbeddedGraph& g = ve.base();
  const long n = ve.group().order();
  const int traced = trace_faces(derived.graph()).face_count();
  const int chi = euler_characteristic(derived.graph());
  const long formula = n * (g.vertex_count() - g.edge_count()) + p.faces;
  out.push_back(check("face-lift", p.faces == traced && p.euler == chi && formula == chi,
                      "predicted " + std::to_string(p.faces) + " faces, traced " + std::to_string(traced) +
                          "; chi " + std::to_string(chi)));
}

void check_component_relation(const VoltageEmbedding& ve, const DerivedEmbedding& derived, std::vector<TheoremCheck>& out) {
  const EmbeddedGraph& dg = derived.graph();
  detail::UnionFind uf(dg.vertex_count());
  for (int e = 0; e < dg.edge_count(); ++e) uf.unite(dg.edge(e).tail, dg.edge(e).head);
  const int n = ve.group().order();
  for (int v = 0; v < ve.base().vertex_count(); ++v)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (same_component(ve, v, a, b) != uf.same(derived.vertex(v, a), derived.vertex(v, b))) {
          out.push_back(check("component-relation", false,
                              "vertex " + std::to_string(v) + ", " + ve.group().name(a) + " vs " + ve.group().name(b)));
          return;
        }
  const CountCheck c = component_count(ve, derived);
  out.push_back(check("component-relation", c.agrees(),
                      "components predicted " + std::to_string(c.predicted) + ", found " + std::to_string(c.observed)));
}

// Random (I, y, W) at v: a connected face subcomplex through v, a connected
// edge set inside it through v, and a closed walk at v inside that.
struct CosetSample {
  int v = 0;
  FaceChain faces;
  std::vector<int> edges;
  std::vector<Dart> walk;
};

CosetSample sample_coset_triple(const EmbeddedGraph& g, const FaceStructure& fs, std::mt19937_64& rng) {
  CosetSample s;
  s.v = uniform(rng, 0, g.vertex_count() - 1);
  Skeleton sk;
  bool found = false;
  for (int attempt = 0; attempt < 20 && !found; ++attempt) {
    FaceChain chain;
    for (int f = 0; f < fs.face_count(); ++f)
      if (coin(rng)) chain.push_back(f);
    if (chain.empty()) continue;
    sk = subcomplex_skeleton(g, fs, chain);
    if (sk.connected && std::binary_search(sk.vertices.begin(), sk.vertices.end(), s.v)) {
      s.faces = chain;
      found = true;
    }
  }
  if (!found) {
    s.faces.resize(fs.face_count());
    std::iota(s.faces.begin(), s.faces.end(), 0);
    sk = subcomplex_skeleton(g, fs, s.faces);
  }

  std::vector<int> pool = sk.edges;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<char> reached(g.vertex_count(), 0), chosen(g.edge_count(), 0);
  reached[s.v] = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int e : pool) {
      if (chosen[e] || !(reached[g.edge(e).tail] || reached[g.edge(e).head])) continue;
      if (!s.edges.empty() && !coin(rng)) continue;
      chosen[e] = 1;
      reached[g.edge(e).tail] = reached[g.edge(e).head] = 1;
      s.edges.push_back(e);
    }
  std::sort(s.edges.begin(), s.edges.end());

  // Random walk out, then back along BFS parents inside y.
  std::vector<std::vector<Dart>> out_darts(g.vertex_count());
  for (int e : s.edges) {
    out_darts[g.tail(positive_dart(e))].push_back(positive_dart(e));
    out_darts[g.tail(negative_dart(e))].push_back(negative_dart(e));
  }
  std::vector<Dart> parent(g.vertex_count(), -1);
  std::vector<int> queue{s.v};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[s.v] = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (Dart d : out_darts[queue[i]]) {
      const int h = g.head(d);
      if (!seen[h]) {
        seen[h] = 1;
        parent[h] = d;
        queue.push_back(h);
      }
    }
  int at = s.v;
  const int steps = uniform(rng, 1, 6);
  for (int i = 0; i < steps; ++i) {
    const auto& options = out_darts[at];
    const Dart d = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
    s.walk.push_back(d);
    at = g.head(d);
  }
  while (at != s.v) {
    const Dart d = reverse(parent[at]);
    s.walk.push_back(d);
    at = g.head(d);
  }
  return s;
}

void check_coset_counts(const VoltageEmbedding& ve, const DerivedEmbedding& derived, std::mt19937_64& rng,
                        int samples, std::vector<TheoremCheck>& out) {
  const FaceStructure fs = trace_faces(ve.base());
  for (int i = 0; i < samples; ++i) {
    const CosetSample s = sample_coset_triple(ve.base(), fs, rng);
    run(out, "coset-counts", [&] {
      const CosetCountReport r = fiber_components(ve, derived, s.v, s.faces, s.edges, s.walk);
      out.push_back(check("coset-counts",
                          r.components.agrees() && r.region_components.agrees() &&
                              r.subgraph_components.agrees() && r.lift_sets.agrees(),
                          "|I|=" + std::to_string(s.faces.size()) + " |y|=" + std::to_string(s.edges.size()) +
                              " |W|=" + std::to_string(s.walk.size())));
    });
  }
}

void check_invariance(const VoltageEmbedding& ve, const DerivedEmbedding& derived, std::mt19937_64& rng,
                      std::vector<TheoremCheck>& out) {
  const EmbeddedGraph& g = ve.base();
  const FiniteGroup& grp = ve.group();

  std::vector<int> loopless;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (Dart d : g.rotation(v)) ok = ok && !g.is_loop(edge_of(d));
    if (ok) loopless.push_back(v);
  }
  if (loopless.empty()) {
    out.push_back({"local-modification", CheckStatus::vacuous, "every vertex carries a loop"});
  } else {
    const int v = loopless[uniform(rng, 0, static_cast<int>(loopless.size()) - 1)];
    const Element c = uniform(rng, 0, grp.order() - 1);
    run(out, "local-modification", [&] {
      std::string why;
      const bool ok = is_embedding_isomorphism(derived.graph(), derive(local_voltage_modification(ve, v, c)).graph(),
                                               local_modification_witness(ve, v, c), &why);
      out.push_back(check("local-modification", ok, why));
    });
  }

  const int e = uniform(rng, 0, g.edge_count() - 1);
  run(out, "subdivision", [&] {
    std::string why;
    const bool ok = is_embedding_isomorphism(subdivide_lifts(derived, e), derive(subdivide_voltage(ve, e)).graph(),
                                             subdivision_witness(ve, e), &why);
    out.push_back(check("subdivision", ok, why));
  });

  const int v = uniform(rng, 0, g.vertex_count() - 1);
  run(out, "sign-switch", [&] {
    const EmbeddedGraph switched = local_sign_switch(g, v);
    const VoltageEmbedding sve(switched, ve.group_ptr(), ve.voltages());
    const EmbeddedGraph& dg = derived.graph();
    const DerivedEmbedding sd = derive(sve);
    const bool ok = euler_characteristic(switched) == euler_characteristic(g) &&
                    is_orientable(switched) == is_orientable(g) &&
                    euler_characteristic(sd.graph()) == euler_characteristic(dg) &&
                    sd.graph().component_count() == dg.component_count();
    out.push_back(check("sign-switch", ok, "vertex " + std::to_string(v)));
  });

  const int n = uniform(rng, 2, 3);
  run(out, "product-lift", [&] {
    const int lifted = derive(lift_to_product(ve, n)).graph().component_count();
    const int base = derived.graph().component_count();
    out.push_back(check("product-lift", lifted == n * base,
                        std::to_string(lifted) + " components over " + std::to_string(base)));
  });
}

void check_circles(const VoltageEmbedding& ve, const DerivedEmbedding& derived, std::mt19937_64& rng, int cap,
                   std::vector<TheoremCheck>& out) {
  const TotalVoltageGraph tvg = total_graph_with_voltages(ve);
  std::vector<Circle> circles = enumerate_circles(ve.base());
  if (static_cast<int>(circles.size()) > cap) circles.resize(cap);
  for (const Circle& c : circles) {
    const Element a = uniform(rng, 0, ve.group().order() - 1);
    run(out, "circle", [&] {
      const CircleReport rep = check_circle(ve, derived, tvg, c, a);
      out.insert(out.end(), rep.checks.begin(), rep.checks.end());
    });
  }
}

std::string describe(const VoltageEmbedding& ve, const DerivedEmbedding& derived) {
  const EmbeddedGraph& g = ve.base();
  return "V=" + std::to_string(g.vertex_count()) + " E=" + std::to_string(g.edge_count()) + " group=" +
         ve.group().literal() + " chi=" + std::to_string(euler_characteristic(g)) +
         (is_orientable(g) ? " orientable" : " nonorientable") +
         " derived-components=" + std::to_string(derived.graph().component_count());
}

}  // namespace

bool FuzzInstanceReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.status == CheckStatus::failed; });
}

bool FuzzReport::ok() const {
  return std::none_of(instances.begin(), instances.end(), [](const FuzzInstanceReport& r) { return r.failed(); });
}

std::uint64_t instance_seed(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

VoltageEmbedding random_embedding(std::mt19937_64& rng, const FuzzCaps& caps) {
  const int nv = uniform(rng, 1, caps.max_vertices);
  const int ne = uniform(rng, std::max(1, nv - 1), std::max(caps.max_edges, nv - 1));
  std::vector<EdgeEnds> ends;
  for (int v = 1; v < nv; ++v) {
    const int u = uniform(rng, 0, v - 1);
    ends.push_back(coin(rng) ? EdgeEnds{u, v} : EdgeEnds{v, u});
  }
  while (static_cast<int>(ends.size()) < ne) ends.push_back({uniform(rng, 0, nv - 1), uniform(rng, 0, nv - 1)});
  std::shuffle(ends.begin(), ends.end(), rng);

  const bool all_positive = coin(rng);
  std::vector<int> signs(ne, 1);
  if (!all_positive)
    for (int& s : signs) s = coin(rng) ? 1 : -1;

  std::vector<std::vector<Dart>> rotation(nv);
  for (int e = 0; e < ne; ++e) {
    rotation[ends[e].tail].push_back(positive_dart(e));
    rotation[ends[e].head].push_back(negative_dart(e));
  }
  for (auto& r : rotation) std::shuffle(r.begin(), r.end(), rng);

  GroupPtr grp = coin(rng) ? make_cyclic(uniform(rng, 1, caps.max_cyclic))
                           : direct_product(make_cyclic(2), make_cyclic(uniform(rng, 1, caps.max_product)));
  std::vector<Element> volts(ne);
  for (Element& x : volts) x = uniform(rng, 0, grp->order() - 1);
  return VoltageEmbedding::from_edge_voltages(EmbeddedGraph(nv, std::move(ends), std::move(signs), std::move(rotation)),
                                              grp, volts);
}

FuzzInstanceReport fuzz_instance(const VoltageEmbedding& ve, std::mt19937_64& rng, const FuzzCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  FuzzInstanceReport r;
  run(r.checks, "instance", [&] {
    validate(ve);
    const DerivedEmbedding derived = derive(ve);
    r.summary = describe(ve, derived);
    run(r.checks, "face-lift", [&] { check_face_lift(ve, derived, r.checks); });
    run(r.checks, "component-relation", [&] { check_component_relation(ve, derived, r.checks); });
    check_coset_counts(ve, derived, rng, caps.samples, r.checks);
    run(r.checks, "derived-medial", [&] {
      verify_derived_medial(ve);
      r.checks.push_back(check("derived-medial", true));
    });
    check_invariance(ve, derived, rng, r.checks);
    check_circles(ve, derived, rng, caps.max_circles, r.checks);
  });
  if (r.failed()) r.reproducer = print_instance(make_instance(ve));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

FuzzReport fuzz(std::uint64_t seed, int count, const FuzzCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  FuzzReport report;
  report.seed = seed;
  report.count = count;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(instance_seed(seed, i));
    const VoltageEmbedding ve = random_embedding(rng, caps);
    FuzzInstanceReport r = fuzz_instance(ve, rng, caps);
    r.index = i;
    r.seed = instance_seed(seed, i);
    if (!r.reproducer.empty())
      r.reproducer = "# fuzz seed " + std::to_string(seed) + ", instance " + std::to_string(i) + "\n" + r.reproducer;
    for (const auto& c : r.checks) {
      FuzzTally& t = report.tallies[c.name];
      (c.status == CheckStatus::confirmed ? t.confirmed : c.status == CheckStatus::vacuous ? t.vacuous : t.failed)++;
    }
    report.instances.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vgraph
