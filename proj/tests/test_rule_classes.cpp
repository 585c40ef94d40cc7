#include <random>

#include "doctest.h"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/rule_classes.hpp"

using namespace lubkit;

namespace {
constexpr Elem a = 0, b = 1, c = 2, d = 3, e = 4;

// Independent oracle for the completed P7 family: lub-containing sets plus
// the listed extra naturals.
std::vector<ElemSet> p7_completed() {
  const Poset p = fixtures::p7_order();
  std::vector<ElemSet> extra{{b, c}, {b, c, d}, {b, c, e}, {b, c, d, e},
                             {c, d, e}, {c, d},   {d, e}};
  std::vector<ElemSet> out;
  for_each_subset(p.all(), [&](ElemSet s) {
    auto l = lub(p, s);
    if (!l) return;
    if (s.contains(*l) || std::find(extra.begin(), extra.end(), s) != extra.end())
      out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Lubpo random_lubpo(std::mt19937_64& rng, std::size_t n, Mode mode) {
  const auto& posets = enumerate_posets(n, true);
  const Poset& q = posets[rng() % posets.size()];
  std::vector<ElemSet> fam;
  for (ElemSet s : mode == Mode::directed ? directed_subsets(q) : subsets_with_lub(q))
    if (rng() % 4 == 0) fam.push_back(s);
  return Lubpo::trusted(q, fam, mode);
}
}  // namespace

TEST_CASE("validity of lub-rules") {
  const Poset p = fixtures::p7_order();
  auto good = LubRule::make(p, {{b, c}, {d, e}}, {d, c});
  CHECK(is_valid_rule(good));
  CHECK(validity_oracle(good).valid);

  auto bad = LubRule::make(p, {}, {b, c});
  CHECK_FALSE(is_valid_rule(bad));
  auto v = validity_oracle(bad);
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness.has_value());
  CHECK(verify_counterexample(bad, *v.witness));
  CHECK(v.witness->target.size() == 2);

  // The lattice fallback alone is also a counterexample.
  auto fallback = validity_oracle(bad, 0);
  REQUIRE(fallback.witness.has_value());
  CHECK(fallback.witness->target.size() == lub_completion(Lubpo::trusted(p, {}, Mode::general)).size());
  CHECK(verify_counterexample(bad, *fallback.witness));

  auto single = LubRule::make(p, {}, {c});
  CHECK(is_valid_rule(single));
  CHECK(validity_oracle(single).valid);

  CHECK_THROWS_AS(LubRule::make(fixtures::vee().poset(), {}, {1, 2}), LubMismatch);
}

TEST_CASE("validity paths agree on small hosts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Poset& q : enumerate_posets(n, false)) {
      auto cands = subsets_with_lub(q);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands.size()); ++m) {
        std::vector<ElemSet> pat;
        for (std::size_t k = 0; k < cands.size(); ++k)
          if (m >> k & 1) pat.push_back(cands[k]);
        for (ElemSet res : cands) {
          auto r = LubRule::make(q, pat, res);
          auto v = validity_oracle(r, 2);
          CHECK(is_valid_rule(r) == v.valid);
          if (!v.valid) CHECK(verify_counterexample(r, *v.witness));
        }
      }
    }
  }
}

TEST_CASE("no small counterexample to a valid rule") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Poset& q : enumerate_posets(n, true)) {
      auto cands = subsets_with_lub(q);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands.size()); m += 3) {
        std::vector<ElemSet> pat;
        for (std::size_t k = 0; k < cands.size(); ++k)
          if (m >> k & 1) pat.push_back(cands[k]);
        for (ElemSet res : cands) {
          auto r = LubRule::make(q, pat, res);
          if (!is_valid_rule(r)) continue;
          for (std::size_t k = 1; k <= 3; ++k)
            for (const Poset& t : enumerate_posets(k, true))
              for (const MonoMap& f : enumerate_monotone_maps(q, t))
                CHECK_FALSE(verify_counterexample(r, {t, f}));
        }
      }
    }
  }
}

TEST_CASE("P7 completions") {
  const Lubpo p = fixtures::p7();
  const auto expect = p7_completed();
  CHECK(sazonov_closure_s8(p.poset(), p.sets()) == expect);
  CHECK(sazonov_closure_s6_s7(p.poset(), p.sets()) == expect);
  CHECK(canonical_closure_s9(p.poset(), p.sets()) == expect);
  Lubpo s = class_completion(p, RuleClass::sazonov);
  CHECK(s.sets() == expect);
  CHECK(s.is_natural({d, c}));
  CHECK(class_completion(p, RuleClass::canonical) == s);
  CHECK(class_completion(s, RuleClass::sazonov) == s);
  CHECK(class_completion(s, RuleClass::canonical) == s);

  Lubpo dir = class_completion(delta_restrict(p), RuleClass::canonical);
  CHECK(dir == all_directed_natural(p.poset()));
}

TEST_CASE("cdlubpo detection") {
  Lubpo bare = fixtures::diamond();
  auto w = s9_witness(bare);
  REQUIRE(w.has_value());
  CHECK(*w == ElemSet{0, 1});
  CHECK_FALSE(is_cdlubpo(bare));
  CHECK(is_cdlubpo(fixtures::diamond(Mode::directed, true)));
  CHECK(is_cdlubpo(fixtures::terminal()));
}

TEST_CASE("class certificates") {
  const Lubpo p = fixtures::p7();
  RuleSystem rs = class_rule_system(p.poset(), RuleClass::sazonov);
  DenseSet start(32);
  for (const Natural& n : p.naturals()) start.insert(n.set.bits());

  auto cde = derive_in_class(p, RuleClass::sazonov, {c, d, e}, a);
  REQUIRE(cde.has_value());
  CHECK(verify_deduction(rs, start, *cde));
  const DeductionNode& root = cde->nodes[cde->root];
  CHECK(root.rule == "S7");
  std::vector<ElemSet> prem;
  for (std::size_t k : root.premises) prem.push_back(ElemSet(cde->nodes[k].label));
  CHECK(prem == std::vector<ElemSet>{{d, e}, {c}, {b, c}});
  CHECK(is_valid_rule(flatten_certificate(p.poset(), *cde)));

  auto dc = derive_in_class(p, RuleClass::sazonov, {d, c}, a);
  REQUIRE(dc.has_value());
  CHECK(dc->nodes[dc->root].rule == "S6");
  CHECK(verify_deduction(rs, start, *dc));
  CHECK(is_valid_rule(flatten_certificate(p.poset(), *dc)));

  auto leaf = derive_in_class(p, RuleClass::sazonov, {b, c}, a);
  REQUIRE(leaf.has_value());
  CHECK(leaf->nodes.size() == 1);
  auto single = derive_in_class(p, RuleClass::sazonov, {d}, d);
  REQUIRE(single.has_value());
  CHECK(single->nodes.size() == 1);

  auto canon = derive_in_class(p, RuleClass::canonical, {d, c}, a);
  REQUIRE(canon.has_value());
  RuleSystem cs = class_rule_system(p.poset(), RuleClass::canonical);
  CHECK(verify_deduction(cs, start, *canon));
  CHECK(canon->nodes[canon->root].rule == "S9");

  CHECK_FALSE(derive_in_class(p, RuleClass::sazonov, {d}, d).value().nodes.empty());
  CHECK_THROWS_AS(derive_in_class(p, RuleClass::sazonov, {d, c}, b), LubMismatch);

  // A tampered S7 node is rejected.
  Deduction bad = *cde;
  bad.nodes[bad.root].label = ElemSet{c, d}.bits();
  CHECK_FALSE(verify_deduction(rs, start, bad));
}

TEST_CASE("completion properties on random instances") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    Lubpo l = random_lubpo(rng, 1 + rng() % 5, Mode::general);
    Lubpo s = class_completion(l, RuleClass::sazonov);
    Lubpo k = class_completion(l, RuleClass::canonical);
    for (const Natural& n : l.naturals()) CHECK(s.is_natural(n.set));
    for (const Natural& n : s.naturals()) CHECK(k.is_natural(n.set));
    CHECK(class_completion(s, RuleClass::sazonov) == s);
    CHECK(class_completion(k, RuleClass::canonical) == k);

    // Certificates for every derived natural flatten to valid rules.
    RuleSystem rs = class_rule_system(l.poset(), RuleClass::sazonov);
    DenseSet start(std::size_t{1} << l.size());
    for (const Natural& n : l.naturals()) start.insert(n.set.bits());
    for (const Natural& n : s.naturals()) {
      auto cert = derive_in_class(l, RuleClass::sazonov, n.set, n.lub);
      REQUIRE(cert.has_value());
      CHECK(verify_deduction(rs, start, *cert));
      CHECK(is_valid_rule(flatten_certificate(l.poset(), *cert)));
    }
  }
}

TEST_CASE("finite collapse of the directed canonical completion") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Poset& q : enumerate_posets(n, true)) {
      Lubpo bare = Lubpo::trusted(q, {}, Mode::directed);
      CHECK(class_completion(bare, RuleClass::canonical) == all_directed_natural(q));
    }
  }
}
