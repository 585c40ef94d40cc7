#include <algorithm>

#include "doctest.h"
#include "lubkit/errors.hpp"
#include "lubkit/order.hpp"

using namespace lubkit;

namespace {

Poset p7_order() {
  // a b c d e
  return Poset::from_relation(5, {{3, 1}, {4, 1}, {4, 2}, {1, 0}, {2, 0}},
                              {"a", "b", "c", "d", "e"});
}

Poset vee() { return Poset::from_relation(3, {{0, 1}, {0, 2}}, {"bot", "l", "r"}); }

// Every relation on n points, filtered to partial orders.
std::vector<Poset> naive_labeled(std::size_t n) {
  std::vector<std::pair<Elem, Elem>> offdiag;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << offdiag.size()); ++m) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (m >> k & 1) pairs.push_back(offdiag[k]);
    Poset p;
    try {
      p = Poset::from_relation(n, pairs);
    } catch (const CycleError&) {
      continue;
    }
    // Keep only relations that were already transitive.
    std::size_t rel = 0;
    for (Elem x = 0; x < n; ++x) rel += p.up(x).size() - 1;
    if (rel == pairs.size()) out.push_back(p);
  }
  return out;
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> perm(a.size());
  for (Elem i = 0; i < a.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x)
      for (Elem y = 0; y < a.size() && ok; ++y)
        ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("relation closure") {
  Poset p = p7_order();
  CHECK(p.leq(3, 0));
  CHECK(p.leq(4, 0));
  CHECK_FALSE(p.leq(3, 2));
  CHECK(Poset::from_relation(1, {}).size() == 1);
  CHECK_THROWS_AS(Poset::from_relation(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relation(2, {{0, 2}}), IndexError);
  CHECK(p.covers().size() == 5);
}

TEST_CASE("lub and directedness") {
  Poset p = p7_order();
  CHECK(lub(p, {1, 2}) == Elem{0});
  CHECK(lub(p, {3, 4}) == Elem{1});
  CHECK_FALSE(lub(vee(), {1, 2}).has_value());
  CHECK_FALSE(lub(p, {}).has_value());
  CHECK(lub(vee(), {}) == Elem{0});

  Poset c3 = Poset::chain(3);
  CHECK(is_directed(c3, c3.all()));
  CHECK_FALSE(is_directed(vee(), {1, 2}));
  CHECK_FALSE(is_directed(p, {3, 4}));
  CHECK_FALSE(is_directed(p, {}));
}

TEST_CASE("down closure and cofinality") {
  Poset p = p7_order();
  CHECK(down_closure(p, {2}) == ElemSet{2, 4});
  CHECK(down_closure(p, {0}) == p.all());
  CHECK(down_closure(p, {}).empty());
  CHECK(cofinal_leq(p, ElemSet{2, 3, 4}, ElemSet{2, 3}));
  CHECK_FALSE(cofinal_leq(p, ElemSet{1, 2}, ElemSet{3, 4}));
  CHECK(cofinal_leq(p, ElemSet{}, ElemSet{}));
  CHECK(cofinal_leq(p, ElemSet{1, 2}, Elem{0}));
}

TEST_CASE("order properties over all small posets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets(n, false)) {
      for_each_subset(p.all(), [&](ElemSet a) {
        ElemSet d = down_closure(p, a);
        CHECK(a.subset_of(d));
        CHECK(down_closure(p, d) == d);
        CHECK(cofinal_leq(p, a, a));
        if (auto l = lub(p, a)) {
          ElemSet ub = upper_bounds(p, a);
          CHECK(ub.contains(*l));
          CHECK(ub.subset_of(p.up(*l)));
        }
        for_each_subset(p.all(), [&](ElemSet b) {
          if (a.subset_of(b)) CHECK(cofinal_leq(p, a, b));
        });
      });
    }
  }
}

TEST_CASE("monotone maps") {
  Poset c2 = Poset::chain(2);
  auto maps = enumerate_monotone_maps(c2, c2);
  REQUIRE(maps.size() == 3);
  CHECK(maps[0].table() == std::vector<Elem>{0, 0});
  CHECK(maps[1].table() == std::vector<Elem>{0, 1});
  CHECK(maps[2].table() == std::vector<Elem>{1, 1});

  Poset one = Poset::chain(1);
  Poset p = p7_order();
  CHECK(enumerate_monotone_maps(one, p).size() == 5);
  CHECK(enumerate_monotone_maps(p, one).size() == 1);

  CHECK_THROWS_AS(MonoMap::make(c2, c2, {1, 0}), NotMonotone);

  // Brute force over all functions.
  for (const Poset& s : enumerate_posets(3, true)) {
    for (const Poset& t : enumerate_posets(3, true)) {
      std::size_t brute = 0;
      std::vector<Elem> table(3);
      for (int k = 0; k < 27; ++k) {
        table = {Elem(k % 3), Elem(k / 3 % 3), Elem(k / 9)};
        if (is_monotone(s, t, table)) ++brute;
      }
      CHECK(enumerate_monotone_maps(s, t).size() == brute);
    }
  }
}

TEST_CASE("poset enumeration") {
  CHECK(enumerate_posets(1, true).size() == 1);
  CHECK(enumerate_posets(2, true).size() == 2);
  CHECK(enumerate_posets(3, true).size() == 5);
  CHECK(enumerate_posets(4, true).size() == 16);
  CHECK(enumerate_posets(5, true).size() == 63);
  CHECK(enumerate_posets(3, false).size() == 19);
  CHECK(enumerate_posets(4, false).size() == 219);
  CHECK_THROWS_AS(enumerate_posets(7, true, 6), BoundExceeded);

  for (std::size_t n = 1; n <= 4; ++n) {
    auto labeled = naive_labeled(n);
    CHECK(labeled.size() == enumerate_posets(n, false).size());
    // Isomorphism classes of the naive list, by pairwise search.
    std::vector<Poset> classes;
    for (const Poset& p : labeled) {
      bool seen = false;
      for (const Poset& q : classes) seen = seen || isomorphic(p, q);
      if (!seen) classes.push_back(p);
    }
    auto reps = enumerate_posets(n, true);
    CHECK(classes.size() == reps.size());
    for (const Poset& p : labeled) {
      std::size_t hits = 0;
      for (const Poset& r : reps) hits += isomorphic(p, r);
      CHECK(hits == 1);
      CHECK(canonical_code(p) == canonical_code(canonical_form(p)));
    }
  }
}
