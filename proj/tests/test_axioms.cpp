#include <random>

#include "doctest.h"
#include "lubkit/axioms.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/harness.hpp"
#include "lubkit/rule_classes.hpp"

using namespace lubkit;

namespace {
constexpr Elem a = 0, b = 1, c = 2, d = 3, e = 4;

// S6 by the definition over all pairs of subsets.
bool naive_s6(const Lubpo& l) {
  const Poset& p = l.poset();
  bool ok = true;
  for (const Natural& x : l.naturals()) {
    for_each_subset(p.all(), [&](ElemSet y) {
      if (l.mode() == Mode::directed && !is_directed(p, y)) return;
      if (cofinal_leq(p, x.set, y) && cofinal_leq(p, y, x.lub) && !l.is_natural(y)) ok = false;
    });
  }
  return ok;
}

// S8 by the definition.
bool naive_s8(const Lubpo& l) {
  const Poset& p = l.poset();
  bool ok = true;
  for (const Natural& x : l.naturals()) {
    for_each_subset(p.all(), [&](ElemSet y) {
      if (under_rel(l, x.set, y) && cofinal_leq(p, y, x.lub) && !l.is_natural(y)) ok = false;
    });
  }
  return ok;
}
}  // namespace

TEST_CASE("axiom examples on P7") {
  const Lubpo p = fixtures::p7();
  auto r = check_axiom(p, Axiom::S6);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(witness_violates(p, Axiom::S6, *r.witness));
  // The witness named for this instance is also a violation.
  CHECK(witness_violates(p, Axiom::S6, {{{b, c}, {b, c, d}}, {}, {}}));

  const Lubpo s = class_completion(p, RuleClass::sazonov);
  for (Axiom ax : {Axiom::S2, Axiom::S6, Axiom::S7, Axiom::S8}) {
    CHECK_MESSAGE(check_axiom(s, ax).holds, to_string(ax));
  }
  const Lubpo k = class_completion(p, RuleClass::canonical);
  CHECK(check_axiom(k, Axiom::S9).holds);
  CHECK(check_axiom(p, Axiom::S3).holds);

  CHECK_THROWS_AS(check_axiom(delta_restrict(p), Axiom::S7), ModeMismatch);
  CHECK(check_axiom(delta_restrict(p), Axiom::S6).exact);
  CHECK_FALSE(check_axiom(p, Axiom::S10).exact);
}

TEST_CASE("axiom names") {
  for (Axiom ax : kAllAxioms) CHECK(parse_axiom(to_string(ax)) == ax);
  CHECK_FALSE(parse_axiom("S11").has_value());
}

TEST_CASE("directed index posets") {
  CHECK(directed_index_posets(4).size() == 9);
  CHECK(directed_index_posets(3).size() == 4);
}

TEST_CASE("witnesses replay and checkers match definitions") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    std::size_t n = 1 + rng() % 4;
    const auto& posets = enumerate_posets(n, true);
    const Poset& q = posets[rng() % posets.size()];
    Mode mode = rng() % 2 ? Mode::general : Mode::directed;
    std::vector<ElemSet> fam;
    for (ElemSet s : mode == Mode::directed ? directed_subsets(q) : subsets_with_lub(q))
      if (rng() % 3 == 0) fam.push_back(s);
    Lubpo l = Lubpo::trusted(q, fam, mode);
    for (Axiom ax : kAllAxioms) {
      if (mode == Mode::directed && general_only(ax)) {
        CHECK_THROWS_AS(check_axiom(l, ax), ModeMismatch);
        continue;
      }
      auto rep = check_axiom(l, ax, 3);
      CHECK(rep.holds == !rep.witness.has_value());
      if (rep.witness) CHECK_MESSAGE(witness_violates(l, ax, *rep.witness), to_string(ax));
    }
    CHECK(check_axiom(l, Axiom::S6).holds == naive_s6(l));
    if (mode == Mode::general) CHECK(check_axiom(l, Axiom::S8).holds == naive_s8(l));
  }
}

TEST_CASE("S10 passes on all-natural dlubpos") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& q : enumerate_posets(n, true))
      CHECK(check_axiom(all_directed_natural(q), Axiom::S10).holds);
}

TEST_CASE("equivalence harness, small exhaustive run") {
  HarnessOptions opt;
  opt.max_size = 3;
  opt.samples = 200;
  opt.sample_size = 5;
  auto rep = equivalence_harness(opt);
  CHECK(rep.discrepancies.empty());
  CHECK(rep.exhaustive_instances > 0);
  CHECK(rep.sampled_instances == 200);
}
