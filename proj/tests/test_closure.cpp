#include "doctest.h"
#include "lubkit/closure.hpp"
#include "lubkit/fixtures.hpp"

using namespace lubkit;

namespace {
constexpr Elem a = 0, b = 1, c = 2, d = 3, e = 4;

std::vector<ElemSet> filter_closed(const Lubpo& l) {
  std::vector<ElemSet> out;
  for_each_subset(l.poset().all(), [&](ElemSet s) {
    if (is_closed(l, s)) out.push_back(s);
  });
  return out;
}
}  // namespace

TEST_CASE("closure under the cl rules") {
  Lubpo p = fixtures::p7();
  RuleSystem r = cl_rule_system(p);
  DenseSet start = to_dense({d, c}, 5);
  CHECK(to_elemset(close_rules(r, start)) == p.poset().all());
  CHECK(cl(p, {d, c}) == p.poset().all());
  CHECK(cl(p, {d}) == ElemSet{d});
  CHECK(cl(p, {}).empty());
  CHECK(cl(p, {b}) == ElemSet{b, d, e});

  DenseSet closed = to_dense({c, e}, 5);
  CHECK(close_rules(r, closed) == closed);

  RuleSystem none = r;
  none.enumerate = [](const DenseSet&, const std::function<void(const RuleInstance&)>&) {};
  CHECK(close_rules(none, start) == start);
}

TEST_CASE("deduction certificates") {
  Lubpo p = fixtures::p7();
  RuleSystem r = cl_rule_system(p);
  DenseSet start = to_dense({d, c}, 5);
  auto ded = deduce(r, start, a);
  REQUIRE(ded.has_value());
  CHECK(verify_deduction(r, start, *ded));
  const DeductionNode& root = ded->nodes[ded->root];
  CHECK(root.label == a);
  CHECK(root.rule == "natural");
  REQUIRE(root.premises.size() == 2);
  const DeductionNode& nb = ded->nodes[root.premises[0]];
  CHECK(nb.label == b);
  CHECK(nb.rule == "natural");
  const DeductionNode& ne = ded->nodes[nb.premises[1]];
  CHECK(ne.label == e);
  CHECK(ne.rule == "down");
  CHECK(ded->nodes[ne.premises[0]].label == c);

  CHECK_FALSE(deduce(r, to_dense({d}, 5), a).has_value());
  auto trivial = deduce(r, start, d);
  REQUIRE(trivial.has_value());
  CHECK(trivial->nodes.size() == 1);

  Deduction bad_leaf = *ded;
  bad_leaf.nodes[ne.premises[0]].label = b;
  CHECK_FALSE(verify_deduction(r, start, bad_leaf));

  Deduction bad_rule = *ded;
  bad_rule.nodes[ded->root].rule = "down";
  CHECK_FALSE(verify_deduction(r, start, bad_rule));

  Deduction shared = *ded;
  shared.nodes[ded->root].premises.push_back(root.premises[0]);
  CHECK_FALSE(verify_deduction(r, start, shared));

  // Exhaustive agreement between closure membership and certificates.
  for_each_subset(p.poset().all(), [&](ElemSet s) {
    DenseSet st = to_dense(s, 5);
    ElemSet closure = cl(p, s);
    for (Elem x = 0; x < 5; ++x) {
      auto dd = deduce(r, st, x);
      CHECK(dd.has_value() == closure.contains(x));
      if (dd) CHECK(verify_deduction(r, st, *dd));
    }
  });
}

TEST_CASE("lub completion") {
  Lubpo p = fixtures::p7();
  ClosedSetLattice lat = lub_completion(p);
  std::vector<ElemSet> expect{{}, {d}, {e}, {c, e}, {b, d, e}, {a, b, c, d, e}};
  std::sort(expect.begin(), expect.end());
  CHECK(lat.sets() == expect);
  CHECK(lat.join({d}, {e}) == ElemSet{b, d, e});
  CHECK(lub_completion(fixtures::terminal()).size() == 2);
  CHECK(in_embed(p, b) == ElemSet{b, d, e});
  CHECK(in_embed(p, e) == ElemSet{e});
  CHECK(in_embed(p, a) == p.poset().all());
  CHECK(lat.as_poset().size() == 6);

  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Poset& q : enumerate_posets(n, true)) {
      auto cands = subsets_with_lub(q);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands.size()); ++m) {
        std::vector<ElemSet> fam;
        for (std::size_t k = 0; k < cands.size(); ++k)
          if (m >> k & 1) fam.push_back(cands[k]);
        Lubpo l = Lubpo::trusted(q, fam, Mode::general);
        CHECK(lub_completion(l).sets() == filter_closed(l));
        for_each_subset(q.all(), [&](ElemSet x) {
          ElemSet cx = cl(l, x);
          CHECK(x.subset_of(cx));
          CHECK(cl(l, cx) == cx);
          for_each_subset(q.all(), [&](ElemSet y) {
            if (x.subset_of(y)) CHECK(cx.subset_of(cl(l, y)));
          });
        });
      }
    }
  }
}
