#include "doctest.h"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/lubpo.hpp"

using namespace lubkit;

namespace {
constexpr Elem a = 0, b = 1, c = 2, d = 3, e = 4;
}

TEST_CASE("make_lubpo validation") {
  Lubpo p = fixtures::p7();
  CHECK(p.naturals().size() == 7);
  CHECK(p.natural_lub({b, c}) == a);
  CHECK(p.natural_lub({d, e}) == b);
  CHECK(p.is_natural({c}));
  CHECK_FALSE(p.is_natural({c, d}));

  std::vector<Natural> wrong{{{b, c}, b}};
  CHECK_THROWS_AS(Lubpo::make(fixtures::p7_order(), wrong), LubMismatch);

  Poset d4 = fixtures::diamond().poset();
  std::vector<Natural> lr{{{1, 2}, 3}};
  CHECK_THROWS_AS(Lubpo::make(d4, lr, Mode::directed), NotDirected);
  CHECK_NOTHROW(Lubpo::make(d4, lr, Mode::general));

  std::vector<ElemSet> empty{ElemSet{}};
  CHECK_THROWS_AS(Lubpo::from_sets(fixtures::p7_order(), empty), EmptySetWithoutBottom);
  CHECK(Lubpo::from_sets(d4, empty).natural_lub(ElemSet{}) == Elem{0});

  std::vector<ElemSet> outside{ElemSet{7}};
  CHECK_THROWS_AS(Lubpo::from_sets(d4, outside), NotInCarrier);
}

TEST_CASE("delta restriction") {
  Lubpo dp = delta_restrict(fixtures::p7());
  CHECK(dp.mode() == Mode::directed);
  CHECK(dp.naturals().size() == 5);
  CHECK(delta_restrict(dp) == dp);

  Lubpo ch = Lubpo::from_sets(Poset::chain(2), std::vector<ElemSet>{{0, 1}});
  CHECK(delta_restrict(ch).natural_lub({0, 1}) == Elem{1});

  Lubpo all = fixtures::diamond(Mode::directed, true);
  CHECK(delta_restrict(all) == all);
}

TEST_CASE("under relation") {
  Lubpo p = fixtures::p7();
  CHECK(under_rel(p, {b, c}, {c, d, e}));
  CHECK_FALSE(under_rel(p, {b, c}, {c, d}));
  for_each_subset(p.poset().all(), [&](ElemSet x) {
    CHECK(under_rel(p, x, x));
    for_each_subset(p.poset().all(), [&](ElemSet y) {
      if (cofinal_leq(p.poset(), x, y)) CHECK(under_rel(p, x, y));
    });
  });
}

TEST_CASE("continuity") {
  Lubpo p = fixtures::p7();
  CHECK(is_continuous(MonoMap::identity(p.poset()), p, p, Preserve::all));
  CHECK(is_continuous(MonoMap::constant(p.poset(), p.poset(), c), p, p, Preserve::all));

  Lubpo full = fixtures::chain(2, Mode::directed, true);
  Lubpo bare = fixtures::chain(2, Mode::directed, false);
  CHECK_FALSE(is_continuous(MonoMap::identity(full.poset()), full, bare));
  CHECK(is_continuous(MonoMap::identity(full.poset()), bare, full));

  // Composition over fixture triples.
  std::vector<Lubpo> fx{fixtures::chain(2), fixtures::chain(2, Mode::directed, true),
                        fixtures::vee(), fixtures::diamond(Mode::directed, true),
                        fixtures::chain(3, Mode::directed, true)};
  for (const auto& x : fx)
    for (const auto& y : fx)
      for (const auto& z : fx) {
        for (const auto& f : enumerate_monotone_maps(x.poset(), y.poset())) {
          if (!is_continuous(f, x, y)) continue;
          for (const auto& g : enumerate_monotone_maps(y.poset(), z.poset())) {
            if (!is_continuous(g, y, z)) continue;
            CHECK(is_continuous(g.after(f), x, z));
          }
        }
      }
}

TEST_CASE("finite directed naturals contain their lub") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& q : enumerate_posets(n, true)) {
      Lubpo all = all_directed_natural(q);
      for (const Natural& nat : all.naturals()) CHECK(nat.set.contains(nat.lub));
    }
  }
}
