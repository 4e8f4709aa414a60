#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vgraph/families.hpp"
#include "vgraph/fuzz.hpp"
#include "vgraph/instance.hpp"

using namespace vgraph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

FuzzTally tally(const FuzzReport& r, const std::string& name) {
  const auto it = r.tallies.find(name);
  return it == r.tallies.end() ? FuzzTally{} : it->second;
}

bool all_confirmed(const FuzzTally& t, long at_least) { return t.failed == 0 && t.vacuous == 0 && t.confirmed >= at_least; }

std::string counts(const FuzzTally& t) {
  return std::to_string(t.confirmed) + " confirmed, " + std::to_string(t.vacuous) + " vacuous, " +
         std::to_string(t.failed) + " failed";
}

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << std::endl;
}

}  // namespace

int main() {
  constexpr int kFuzzCount = 1000;
  const auto start = Clock::now();
  const FuzzReport fz = fuzz(20240601, kFuzzCount);
  const double fuzz_seconds = seconds_since(start);

  // 1. Same-component relation on every fiber pair equals union-find.
  {
    const FuzzTally t = tally(fz, "component-relation");
    report(1, all_confirmed(t, kFuzzCount) && fuzz_seconds < 60.0,
           "component relation on " + std::to_string(kFuzzCount) + " instances: " + counts(t) + "; full run " +
               std::to_string(fuzz_seconds) + " s");
  }

  // 2. Coset counts on every sampled (I, y, W).
  {
    const FuzzTally t = tally(fz, "coset-counts");
    report(2, all_confirmed(t, kFuzzCount), "coset component counts over sampled (I, y, W): " + counts(t));
  }

  // 3. Face lifting and the Euler characteristic of the derived surface.
  {
    const FuzzTally t = tally(fz, "face-lift");
    report(3, all_confirmed(t, kFuzzCount), "face lifting and derived Euler characteristic: " + counts(t));
  }

  // 4. Derived medial graph equals the medial graph of the derived embedding.
  {
    const FuzzTally t = tally(fz, "derived-medial");
    report(4, all_confirmed(t, 100), "labeled derived-medial correspondence: " + counts(t));
  }

  // 5. Orientation-reversing circles: |omega| even iff lifts preserve orientation.
  {
    const FuzzTally t = tally(fz, "reversing-lift-parity");
    report(5, all_confirmed(t, 1), "lift parity on orientation-reversing circles: " + counts(t));
  }

  // 6. Region structure theorems on every case meeting their hypotheses.
  {
    bool pass = true;
    std::string detail;
    for (const char* name : {"region-count", "reversing-regions", "preserving-regions", "nonseparating-lifts"}) {
      const FuzzTally t = tally(fz, name);
      pass = pass && t.failed == 0 && t.confirmed > 0;
      detail += std::string(detail.empty() ? "" : "; ") + name + " " + counts(t);
    }
    report(6, pass, detail);
  }

  // 7. Coset z-graphs equal brute-force z-graphs (fuzz and every family).
  std::vector<ExampleFamily> families;
  std::map<std::string, double> family_seconds;
  std::vector<std::string> family_errors;
  auto add_family = [&](const std::string& key, const std::string& id, const std::vector<int>& params) {
    const auto t = Clock::now();
    try {
      families.push_back(generate_example(id, params));
    } catch (const std::exception& e) {
      family_errors.push_back(id + ": " + e.what());
    }
    family_seconds[key] += seconds_since(t);
  };
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) add_family("ex41", "ex41", {a, b});
  for (int n = 1; n <= 8; ++n) add_family("ex42", "ex42", {n});
  for (int n = 1; n <= 8; ++n) add_family("ex43", "ex43", {n});
  for (int k = 1; k <= 4; ++k)
    for (int d = 1; d <= 4; ++d) add_family("ex44", "ex44", {k, d});
  for (int n = 1; n <= 8; ++n) add_family("ex45", "ex45", {n});

  std::vector<std::pair<const ExampleFamily*, FamilyResult>> results;
  for (const auto& ex : families) {
    const auto t = Clock::now();
    try {
      results.emplace_back(&ex, evaluate_family(ex));
    } catch (const std::exception& e) {
      family_errors.push_back(ex.id + ": " + e.what());
    }
    family_seconds[ex.id.substr(0, 4)] += seconds_since(t);
  }

  {
    bool pass = family_errors.empty();
    std::string detail;
    for (const char* name : {"zgraph-separating", "zgraph-reversing", "zgraph-preserving"}) {
      const FuzzTally t = tally(fz, name);
      pass = pass && t.failed == 0 && t.confirmed > 0;
      detail += std::string(detail.empty() ? "" : "; ") + name + " " + counts(t);
    }
    int families_equal = 0;
    for (const auto& [ex, r] : results) {
      if (r.zgraphs_equal) {
        ++families_equal;
      } else {
        pass = false;
        detail += "; " + ex->id + " differs: " + r.zgraph_detail;
      }
    }
    pass = pass && families_equal == 65;
    report(7, pass, detail + "; families equal " + std::to_string(families_equal) + "/65");
  }

  // 8. Example families reproduce their stated counts.
  {
    bool pass = family_errors.empty() && results.size() == 65;
    std::string detail;
    for (const auto& e : family_errors) detail += "; error " + e;
    int flagged = 0;
    for (const auto& [ex, r] : results) {
      if (!r.ok()) {
        pass = false;
        for (const auto& o : r.observations)
          if (!o.agrees())
            detail += "; " + ex->id + " " + o.name + " expected " + std::to_string(o.expected) + " observed " +
                      std::to_string(o.observed);
      }
      if (ex->id.rfind("ex45", 0) == 0) flagged += !r.notes.empty();
    }
    pass = pass && flagged == 8;
    for (const auto& [key, s] : family_seconds) {
      pass = pass && s < 5.0;
      detail += "; " + key + " " + std::to_string(s) + " s";
    }
    report(8, pass,
           std::to_string(results.size()) + " family instances evaluated, ex45 region-count discrepancy flagged " +
               std::to_string(flagged) + "/8" + detail);
  }

  // 9. Invariance suite on the catalog plus 100 random instances.
  {
    FuzzReport inv;
    for (const auto& entry : builtin_catalog()) {
      std::mt19937_64 rng(7);
      FuzzInstanceReport r = fuzz_instance(parse_instance(entry.text).embedding, rng, FuzzCaps{});
      for (const auto& c : r.checks) {
        FuzzTally& t = inv.tallies[c.name];
        (c.status == CheckStatus::confirmed ? t.confirmed : c.status == CheckStatus::vacuous ? t.vacuous : t.failed)++;
      }
    }
    for (const char* name : {"local-modification", "subdivision", "sign-switch", "product-lift"}) {
      const FuzzTally t = tally(fz, name);
      FuzzTally& total = inv.tallies[name];
      total.confirmed += t.confirmed;
      total.vacuous += t.vacuous;
      total.failed += t.failed;
    }
    bool pass = true;
    std::string detail;
    for (const char* name : {"local-modification", "subdivision", "sign-switch", "product-lift"}) {
      const FuzzTally t = inv.tallies[name];
      pass = pass && t.failed == 0 && t.confirmed >= 100;
      detail += std::string(detail.empty() ? "" : "; ") + name + " " + counts(t);
    }
    report(9, pass, detail);
  }

  return failures == 0 ? 0 : 1;
}
