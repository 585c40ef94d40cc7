#include "lubkit/harness.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "lubkit/errors.hpp"
#include "lubkit/rule_classes.hpp"

namespace lubkit {

namespace {

constexpr Axiom kChecked[] = {Axiom::S2, Axiom::S4_1_FWD, Axiom::S4_1_BWD, Axiom::S4_2,
                              Axiom::S5, Axiom::S6,       Axiom::S7,       Axiom::S8};

std::vector<ElemSet> family_candidates(const Poset& p) {
  std::vector<ElemSet> out;
  for (ElemSet s : subsets_with_lub(p))
    if (s.size() != 1) out.push_back(s);
  return out;
}

Lubpo random_instance(const std::vector<Poset>& posets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Poset& p = posets[rng() % posets.size()];
  const auto cands = family_candidates(p);
  const int kind = static_cast<int>(rng() % 3);
  const double density = kind == 0 ? std::uniform_real_distribution<>(0.0, 0.6)(rng)
                                   : std::uniform_real_distribution<>(0.0, 0.15)(rng);
  std::vector<ElemSet> fam;
  for (ElemSet s : cands)
    if (std::uniform_real_distribution<>(0.0, 1.0)(rng) < density) fam.push_back(s);
  if (kind == 0) return Lubpo::trusted(p, fam, Mode::general);
  fam = sazonov_closure_s8(p, fam);
  if (kind == 2) {
    std::vector<std::size_t> removable;
    for (std::size_t k = 0; k < fam.size(); ++k)
      if (fam[k].size() != 1) removable.push_back(k);
    if (!removable.empty()) fam.erase(fam.begin() + removable[rng() % removable.size()]);
  }
  return Lubpo::trusted(p, fam, Mode::general);
}

}  // namespace

const std::vector<std::string>& harness_relations() {
  static const std::vector<std::string> names{
      "S2 & S4_1_BWD <=> S6", "S6 => S4_2", "S2 & S5 <=> S6",
      "S6 => (S4_1_FWD <=> S7)", "S6 & S7 <=> S8",
      "S2 & S4_1_FWD & S4_1_BWD & S4_2 <=> S6 & S7"};
  return names;
}

std::vector<std::string> failed_relations(const Lubpo& d, std::size_t bound,
                                          std::map<Axiom, bool>* values) {
  std::map<Axiom, bool> v;
  for (Axiom a : kChecked) v[a] = check_axiom(d, a, bound).holds;
  const bool s2 = v[Axiom::S2], fwd = v[Axiom::S4_1_FWD], bwd = v[Axiom::S4_1_BWD],
             s42 = v[Axiom::S4_2], s5 = v[Axiom::S5], s6 = v[Axiom::S6],
             s7 = v[Axiom::S7], s8 = v[Axiom::S8];
  const bool ok[] = {(s2 && bwd) == s6,        !s6 || s42,
                     (s2 && s5) == s6,         !s6 || (fwd == s7),
                     (s6 && s7) == s8,         (s2 && fwd && bwd && s42) == (s6 && s7)};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < harness_relations().size(); ++k)
    if (!ok[k]) out.push_back(harness_relations()[k]);
  if (values) *values = std::move(v);
  return out;
}

void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        f(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

HarnessReport equivalence_harness(const HarnessOptions& opt) {
  HarnessReport rep;
  struct Job {
    const Poset* poset;
    std::uint64_t family;  // bitmask over candidates, or a seed when sampled
    bool sampled;
  };
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= opt.max_size; ++n)
    for (const Poset& p : enumerate_posets(n, true)) posets.push_back(p);
  std::vector<std::vector<ElemSet>> cands;
  for (const Poset& p : posets) cands.push_back(family_candidates(p));

  std::vector<Job> jobs;
  for (std::size_t k = 0; k < posets.size(); ++k) {
    if (cands[k].size() >= 40) throw BoundExceeded("too many families for the harness");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands[k].size()); ++m)
      jobs.push_back({&posets[k], m, false});
  }
  rep.exhaustive_instances = jobs.size();
  std::vector<Poset> sample_posets;
  if (opt.samples > 0) {
    sample_posets = enumerate_posets(opt.sample_size, true,
                                     std::max(opt.sample_size, enumeration_cap()));
    for (std::size_t s = 0; s < opt.samples; ++s)
      jobs.push_back({nullptr, opt.seed * 1000003u + s, true});
  }
  rep.sampled_instances = opt.samples;

  std::vector<std::vector<Discrepancy>> found(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t j) {
    const Job& job = jobs[j];
    Lubpo d;
    std::size_t bound = opt.exhaustive_bound;
    if (job.sampled) {
      d = random_instance(sample_posets, job.family);
      bound = opt.sampled_bound;
    } else {
      const std::size_t k = static_cast<std::size_t>(job.poset - posets.data());
      std::vector<ElemSet> fam;
      for (std::size_t b = 0; b < cands[k].size(); ++b)
        if (job.family >> b & 1) fam.push_back(cands[k][b]);
      d = Lubpo::trusted(*job.poset, std::move(fam), Mode::general);
    }
    std::map<Axiom, bool> values;
    for (const std::string& r : failed_relations(d, bound, &values))
      found[j].push_back({r, d, values});
  });
  for (const std::string& r : harness_relations()) rep.checks[r] = jobs.size();
  for (auto& f : found)
    for (auto& x : f) rep.discrepancies.push_back(std::move(x));
  return rep;
}

}  // namespace lubkit
