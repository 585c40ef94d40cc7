// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lubkit/closure.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/gallery.hpp"
#include "lubkit/harness.hpp"
#include "lubkit/rule_classes.hpp"
#include "lubkit/sweeps.hpp"

using namespace lubkit;

namespace {

// Sizes, sample counts and time limits (seconds, 0 = none).
constexpr std::size_t kHarnessMaxSize = 4;
constexpr std::size_t kHarnessSamples = 10000;
constexpr std::size_t kHarnessSampleSize = 6;
constexpr std::size_t kValidityMaxSize = 3;
constexpr std::size_t kDerivedSamples = 1000;
constexpr std::size_t kDerivedMaxSize = 5;
constexpr std::size_t kSweepMaxSize = 4;
constexpr std::size_t kLemmaSamples = 1000;
constexpr std::size_t kRealizationSamples = 1000;
constexpr std::size_t kG2Bound = 64;
constexpr std::size_t kG3Bound = 64;
constexpr std::size_t kG4Bound = 16;
constexpr std::uint64_t kSeed = 20240601;

constexpr double kG1Limit = 1.0;
constexpr double kHarnessExhaustiveLimit = 300.0;
constexpr double kHarnessSampledLimit = 60.0;
constexpr double kValidityLimit = 120.0;
constexpr double kCccLimit = 120.0;
constexpr double kGalleryLimit = 10.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool run(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto t = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double s = seconds_since(t);
  std::string timing = std::to_string(s).substr(0, std::to_string(s).find('.') + 3) + " s";
  if (limit > 0) {
    timing += " of " + std::to_string(static_cast<int>(limit)) + " s";
    if (s > limit) {
      o.pass = false;
      o.detail += "; over time";
    }
  }
  std::printf("[%s] %2d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              timing.c_str());
  std::fflush(stdout);
  return o.pass;
}

Outcome from_sweep(const SweepReport& r) {
  std::string d = std::to_string(r.checked) + " checked, " + std::to_string(r.failures.size()) +
                  " failures";
  if (!r.note.empty()) d += ", " + r.note;
  if (r.skipped) d += ", " + std::to_string(r.skipped) + " beyond size guards";
  if (!r.failures.empty()) d += "; first: " + r.failures.front();
  return {r.ok() && r.checked > 0, d};
}

Outcome from_gallery(const GalleryReport& r) {
  std::string failed;
  for (const GalleryCheck& c : r.checks) {
    if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
  }
  return {r.ok(), std::to_string(r.checks.size()) + " checks at bound " +
                      std::to_string(r.bound) + (failed.empty() ? "" : "; failed: " + failed)};
}

}  // namespace

int main() {
  bool all = true;
  constexpr Elem a = 0, c = 2, d = 3;

  all &= run(1, "closure fact on P7", kG1Limit, [] {
    const Lubpo p7 = fixtures::p7();
    const bool in = cl(p7, ElemSet{c, d}).contains(a);
    return Outcome{in, std::string("a ") + (in ? "in" : "not in") + " cl{c,d}"};
  });

  all &= run(2, "completion audit on P7", kG1Limit, [] {
    const Lubpo p7 = fixtures::p7();
    std::vector<ElemSet> nat;
    for (const Natural& n : p7.naturals()) nat.push_back(n.set);
    const auto s8 = sazonov_closure_s8(p7.poset(), nat);
    const auto s67 = sazonov_closure_s6_s7(p7.poset(), nat);
    const auto s9 = canonical_closure_s9(p7.poset(), nat);
    const auto s9d = canonical_closure_s9(p7.poset(), nat, true);
    const bool has = std::find(s8.begin(), s8.end(), ElemSet{c, d}) != s8.end();
    const GalleryReport g1 = run_gallery("g1");
    const bool pass = s8 == s67 && s9 == s9d && s8 == s9 && has && g1.ok() && !g1.errata.empty();
    return Outcome{pass, std::string("S8 ") + (s8 == s67 ? "=" : "!=") + " S6/S7 (" +
                             std::to_string(s8.size()) + " sets), canonical " +
                             (s8 == s9 ? "coincides" : "differs") + ", {c,d} -> a " +
                             (has ? "derivable" : "not derivable") + ", certificates " +
                             (g1.ok() ? "verify" : "fail") + ", erratum " +
                             (g1.errata.empty() ? "not raised" : "raised")};
  });

  all &= run(3, "equivalence harness, exhaustive", kHarnessExhaustiveLimit, [] {
    HarnessOptions opt;
    opt.max_size = kHarnessMaxSize;
    const HarnessReport r = equivalence_harness(opt);
    return Outcome{r.discrepancies.empty() && r.exhaustive_instances > 0,
                   std::to_string(r.exhaustive_instances) + " instances on <= " +
                       std::to_string(kHarnessMaxSize) + " elements, " +
                       std::to_string(r.discrepancies.size()) + " discrepancies"};
  });
  all &= run(3, "equivalence harness, sampled", kHarnessSampledLimit, [] {
    HarnessOptions opt;
    opt.max_size = 0;
    opt.samples = kHarnessSamples;
    opt.sample_size = kHarnessSampleSize;
    opt.seed = kSeed;
    const HarnessReport r = equivalence_harness(opt);
    return Outcome{r.discrepancies.empty() && r.sampled_instances == kHarnessSamples,
                   std::to_string(r.sampled_instances) + " instances on " +
                       std::to_string(kHarnessSampleSize) + " elements, " +
                       std::to_string(r.discrepancies.size()) + " discrepancies"};
  });

  all &= run(4, "validity dual-path agreement", kValidityLimit,
             [] { return from_sweep(validity_agreement_sweep(kValidityMaxSize)); });
  all &= run(5, "derived rules are valid", 0, [] {
    return from_sweep(derived_rule_sweep(kDerivedSamples, kDerivedMaxSize, kSeed));
  });
  all &= run(6, "embedding properties", 0,
             [] { return from_sweep(embedding_sweep(kSweepMaxSize)); });
  all &= run(7, "categorical laws", kCccLimit, [] { return from_sweep(ccc_sweep()); });
  all &= run(8, "exponent relations", 0, [] { return from_sweep(exponent_sweep()); });
  all &= run(9, "algebraicity theorems", 0, [] {
    return from_sweep(algebraicity_sweep(kSweepMaxSize, kLemmaSamples, kSeed));
  });
  all &= run(10, "realization biconditional", 0, [] {
    return from_sweep(realization_sweep(kSweepMaxSize, kRealizationSamples, kSeed));
  });
  all &= run(11, "gallery g2", kGalleryLimit,
             [] { return from_gallery(run_gallery("g2", kG2Bound)); });
  all &= run(12, "gallery g3 and g4", kGalleryLimit, [] {
    const Outcome g3 = from_gallery(run_gallery("g3", kG3Bound));
    const Outcome g4 = from_gallery(run_gallery("g4", kG4Bound));
    return Outcome{g3.pass && g4.pass, "g3 " + g3.detail + "; g4 " + g4.detail};
  });

  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
