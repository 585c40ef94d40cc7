#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lubkit/axioms.hpp"
#include "lubkit/lubpo.hpp"

namespace lubkit {

struct HarnessOptions {
  std::size_t max_size = 4;        // exhaustive over all posets up to this size
  std::size_t samples = 0;         // random instances on top
  std::size_t sample_size = 6;     // carrier size of random instances
  std::uint64_t seed = 1;
  std::size_t exhaustive_bound = 4;  // index-poset bound for S4_2
  std::size_t sampled_bound = 3;
  std::size_t threads = 0;           // 0: hardware concurrency
};

/// One failed relation on one instance, with every axiom value computed.
struct Discrepancy {
  std::string relation;
  Lubpo instance;
  std::map<Axiom, bool> values;
};

struct HarnessReport {
  std::size_t exhaustive_instances = 0;
  std::size_t sampled_instances = 0;
  std::map<std::string, std::size_t> checks;  // relation -> instances checked
  std::vector<Discrepancy> discrepancies;     // in instance order
};

/// Names of the checked relations, in report order.
const std::vector<std::string>& harness_relations();

/// Checks the relations between S2, S4_1_*, S4_2, S5, S6, S7 and S8 on
/// general-mode instances: every S1-consistent family on every poset with at
/// most max_size elements (one poset per isomorphism class), then `samples`
/// random instances. Results do not depend on the thread count.
HarnessReport equivalence_harness(const HarnessOptions& opt);

/// Evaluates the relations on one instance; returns the failed ones.
std::vector<std::string> failed_relations(const Lubpo& d, std::size_t bound,
                                          std::map<Axiom, bool>* values = nullptr);

/// Runs f(k) for k in [0, n) on worker threads.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& f);

}  // namespace lubkit
