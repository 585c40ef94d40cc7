#include <random>

#include "doctest.h"
#include "lubkit/axioms.hpp"
#include "lubkit/category.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/rule_classes.hpp"
#include "support.hpp"

using namespace lubkit;
using testing_support::small_lubpos;

namespace {

std::vector<MonoMap> all_continuous(const Lubpo& d, const Lubpo& e) {
  std::vector<MonoMap> out;
  for (const MonoMap& f : enumerate_monotone_maps(d.poset(), e.poset())) {
    if (is_continuous(f, d, e)) out.push_back(f);
  }
  return out;
}

// Keeps function spaces within the axiom checkers' range.
bool small_space(const Lubpo& d, const Lubpo& e) { return all_continuous(d, e).size() <= 10; }

}  // namespace

TEST_CASE("product: orders, naturals and projections") {
  ProductSpace p = product(fixtures::chain(2), fixtures::chain(2));
  const Poset& o = p.lubpo.poset();
  CHECK(o.size() == 4);
  CHECK(least(o) == p.pair(0, 0));
  CHECK(greatest(o) == p.pair(1, 1));
  CHECK_FALSE(o.leq(p.pair(0, 1), p.pair(1, 0)));
  CHECK_FALSE(o.leq(p.pair(1, 0), p.pair(0, 1)));
  CHECK(o.label(p.pair(1, 0)) == "(x1,x0)");

  Lubpo d = fixtures::diamond(Mode::directed, true);
  ProductSpace t = product(fixtures::terminal(), d);
  for (Elem x = 0; x < d.size(); ++x) {
    for (Elem y = 0; y < d.size(); ++y) {
      CHECK(t.lubpo.poset().leq(t.pair(0, x), t.pair(0, y)) == d.poset().leq(x, y));
    }
  }
  for (ElemSet s : directed_subsets(d.poset())) {
    ElemSet lifted;
    for (Elem x : s) lifted.insert(t.pair(0, x));
    CHECK(t.lubpo.is_natural(lifted) == d.is_natural(s));
  }

  constexpr Elem dd = 3, ee = 4;
  ProductSpace q = product(delta_restrict(fixtures::p7()), fixtures::chain(2, Mode::directed, true));
  CHECK(q.lubpo.natural_lub(ElemSet{q.pair(dd, 0), q.pair(dd, 1)}) == q.pair(dd, 1));
  CHECK_FALSE(q.lubpo.is_natural(ElemSet{q.pair(dd, 0), q.pair(ee, 1)}));
  CHECK(is_continuous(q.proj1, q.lubpo, q.left));
  CHECK(is_continuous(q.proj2, q.lubpo, q.right));

  CHECK_THROWS_AS(product(fixtures::chain(2, Mode::general), fixtures::chain(2)), ModeMismatch);
}

TEST_CASE("product: pairing of continuous maps is continuous") {
  auto lubpos = small_lubpos(2, Mode::directed);
  for (const Lubpo& c : lubpos) {
    for (const Lubpo& d : lubpos) {
      for (const Lubpo& e : lubpos) {
        ProductSpace de = product(d, e);
        for (const MonoMap& f : all_continuous(c, d)) {
          for (const MonoMap& g : all_continuous(c, e)) {
            MonoMap h = pairing(de, f, g);
            CHECK(is_continuous(h, c, de.lubpo));
            CHECK(de.proj1.after(h) == f);
            CHECK(de.proj2.after(h) == g);
          }
        }
      }
    }
  }
}

TEST_CASE("pointwise exponent examples") {
  FunctionSpace fs = pointwise_exp(fixtures::chain(2), fixtures::chain(2, Mode::directed, true));
  REQUIRE(fs.carrier.size() == 3);
  CHECK(fs.carrier[0].table() == std::vector<Elem>{0, 0});
  CHECK(fs.carrier[1].table() == std::vector<Elem>{0, 1});
  CHECK(fs.carrier[2].table() == std::vector<Elem>{1, 1});
  CHECK(fs.lubpo.poset().same_order(Poset::chain(3)));
  CHECK(fs.lubpo.sets() == directed_subsets(fs.lubpo.poset()));

  FunctionSpace to_one = pointwise_exp(fixtures::diamond(), fixtures::terminal());
  CHECK(to_one.carrier.size() == 1);

  Lubpo e = fixtures::diamond(Mode::directed, true);
  FunctionSpace from_one = pointwise_exp(fixtures::terminal(), e);
  REQUIRE(from_one.carrier.size() == e.size());
  for (Elem i = 0; i < e.size(); ++i) CHECK(from_one.carrier[i](0) == i);
  CHECK(from_one.lubpo.same_structure(e));

  CHECK_THROWS_AS(pointwise_exp(fixtures::chain(5), fixtures::chain(5)), BoundExceeded);
}

TEST_CASE("general exponent: carrier, singletons, naturals within pointwise") {
  FunctionSpace g = general_exp(fixtures::chain(2), fixtures::chain(2, Mode::directed, true));
  FunctionSpace p = pointwise_exp(fixtures::chain(2), fixtures::chain(2, Mode::directed, true));
  CHECK(g.carrier == p.carrier);
  CHECK(g.flavor == ExpFlavor::general);
  for (Elem f = 0; f < g.carrier.size(); ++f) CHECK(g.lubpo.is_natural(ElemSet::single(f)));

  auto lubpos = small_lubpos(3, Mode::directed);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  std::size_t strict = 0;
  for (int k = 0; k < 300; ++k) {
    const Lubpo& d = lubpos[pick(rng)];
    const Lubpo& e = lubpos[pick(rng)];
    if (!small_space(d, e)) continue;
    FunctionSpace gs = general_exp(d, e);
    FunctionSpace ps = pointwise_exp(d, e);
    REQUIRE(gs.carrier == ps.carrier);
    for (const Natural& n : gs.lubpo.naturals()) CHECK(ps.lubpo.is_natural(n.set));
    if (gs.lubpo.naturals().size() < ps.lubpo.naturals().size()) ++strict;
  }
  MESSAGE("general strictly smaller in " << strict << " of 300 samples");

  CHECK_THROWS_AS(general_exp(fixtures::chain(2, Mode::general), fixtures::chain(2, Mode::general)),
                  ModeMismatch);
}

TEST_CASE("eval and curry") {
  Lubpo c2 = fixtures::chain(2, Mode::directed, true);
  FunctionSpace fs = pointwise_exp(c2, c2);
  Elem id = *fs.index_of(MonoMap::identity(c2.poset()));
  CHECK(eval_apply(fs, id, 0) == 0);
  CHECK(eval_apply(fs, id, 1) == 1);
  CHECK_THROWS_AS(eval_apply(fs, 99, 0), NotInCarrier);
  CHECK_THROWS_AS(eval_apply(fs, id, 2), NotInCarrier);

  ProductSpace cd = product(fixtures::vee(), c2);
  CurryResult r = curry_fn(cd, fs, cd.proj2);
  CHECK(r.continuous);
  for (Elem x = 0; x < 3; ++x) CHECK(r.map(x) == id);

  ProductSpace fd = product(fs.lubpo, c2);
  MonoMap ev = eval_map(fs, fd);
  CHECK(is_continuous(ev, fd.lubpo, c2) == eval_continuous(fs));
}

TEST_CASE("curry into the pointwise exponent is continuous on small fixtures") {
  auto lubpos = small_lubpos(2, Mode::directed);
  lubpos.push_back(fixtures::vee());
  lubpos.push_back(fixtures::chain(3, Mode::directed, true));
  std::size_t maps = 0;
  for (const Lubpo& c : lubpos) {
    for (const Lubpo& d : lubpos) {
      ProductSpace cd = product(c, d);
      for (const Lubpo& e : lubpos) {
        if (cd.lubpo.size() * e.size() > 20 && e.size() > 2) continue;
        FunctionSpace fs = pointwise_exp(d, e);
        for (const MonoMap& f : all_continuous(cd.lubpo, e)) {
          CurryResult r = curry_fn(cd, fs, f);
          CHECK(r.continuous);
          ++maps;
        }
      }
    }
  }
  CHECK(maps > 1000);
}

TEST_CASE("curry search finds nothing on two-element lubpos") {
  CurrySearchReport rep = curry_counterexample_search(2);
  CHECK(rep.exhausted);
  CHECK(rep.triples == 64);
  CHECK(rep.findings.empty());
}

TEST_CASE("bar index") {
  Lubpo c = bar_index(Poset::chain(2));
  CHECK(c.poset().same_order(Poset::chain(2)));
  CHECK(c.natural_lub(ElemSet{0, 1}) == Elem{1});
  Lubpo one = bar_index(Poset::antichain(1));
  CHECK(one.size() == 1);
  CHECK(one.naturals().size() == 1);
  CHECK_THROWS_AS(bar_index(fixtures::vee().poset().relabeled({"b", "l", "r"})),
                  NotDirectedPoset);
  // V upside down has a top and is fine.
  CHECK_NOTHROW(bar_index(Poset::from_relation(3, {{0, 2}, {1, 2}})));
  CHECK_THROWS_AS(bar_index(Poset::antichain(2)), NotDirectedPoset);
}

TEST_CASE("ccc laws on fixtures") {
  Lubpo c2 = fixtures::chain(2, Mode::directed, true);
  CccReport all = ccc_laws(c2, c2, c2);
  CHECK(all.codomain_s10);
  CHECK(all.all_hold());
  for (const LawCheck& l : all.laws) CHECK_MESSAGE(l.holds, l.name << ": " << l.detail);

  Lubpo one = fixtures::terminal();
  CHECK(ccc_laws(one, c2, c2).all_hold());
  CHECK(ccc_laws(c2, one, c2).all_hold());
  CHECK(ccc_laws(c2, c2, one).all_hold());

  CHECK_THROWS_AS(ccc_laws(fixtures::diamond(), c2, c2), BoundExceeded);
}

TEST_CASE("laws hold whenever the codomain satisfies bounded S10") {
  auto lubpos = small_lubpos(3, Mode::directed);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  std::size_t asserted = 0, reported = 0;
  for (int k = 0; k < 120; ++k) {
    const Lubpo& c = lubpos[pick(rng)];
    const Lubpo& d = lubpos[pick(rng)];
    const Lubpo& e = lubpos[pick(rng)];
    if (!small_space(d, e)) continue;
    CccReport r = ccc_laws(c, d, e);
    if (r.codomain_s10) {
      ++asserted;
      CHECK(r.all_hold());
    } else {
      ++reported;
    }
  }
  MESSAGE(asserted << " asserted, " << reported << " reported");
}

TEST_CASE("eval is continuous when the codomain satisfies S10") {
  auto lubpos = small_lubpos(3, Mode::directed);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  for (int k = 0; k < 300; ++k) {
    const Lubpo& d = lubpos[pick(rng)];
    const Lubpo& e = lubpos[pick(rng)];
    if (!small_space(d, e) || !check_axiom(e, Axiom::S10).holds) continue;
    CHECK(eval_continuous(pointwise_exp(d, e)));
  }
}

TEST_CASE("S5 is preserved by products and the general exponent") {
  auto lubpos = small_lubpos(3, Mode::directed);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  std::size_t products = 0, exps = 0;
  for (int k = 0; k < 400; ++k) {
    const Lubpo& d = lubpos[pick(rng)];
    const Lubpo& e = lubpos[pick(rng)];
    const bool e5 = check_axiom(e, Axiom::S5).holds;
    if (e5 && check_axiom(d, Axiom::S5).holds) {
      ++products;
      CHECK(check_axiom(product(d, e).lubpo, Axiom::S5).holds);
    }
    if (e5 && small_space(d, e)) {
      ++exps;
      CHECK(check_axiom(general_exp(d, e).lubpo, Axiom::S5).holds);
    }
  }
  CHECK(products > 20);
  CHECK(exps > 20);
}

TEST_CASE("pointwise exponent of canonical completions satisfies S2, S6, S7") {
  auto lubpos = small_lubpos(3, Mode::general);
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  for (int k = 0; k < 40; ++k) {
    Lubpo d = class_completion(lubpos[pick(rng)], RuleClass::canonical);
    Lubpo e = class_completion(lubpos[pick(rng)], RuleClass::canonical);
    if (!small_space(d, e)) continue;
    FunctionSpace fs = pointwise_exp(d, e);
    for (Axiom a : {Axiom::S2, Axiom::S6, Axiom::S7}) {
      CHECK_MESSAGE(check_axiom(fs.lubpo, a).holds, to_string(a));
    }
  }
}

TEST_CASE("continuous maps stay continuous between class completions") {
  for (Mode mode : {Mode::directed, Mode::general}) {
    auto lubpos = small_lubpos(3, mode);
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
    for (int k = 0; k < 150; ++k) {
      const Lubpo& d = lubpos[pick(rng)];
      const Lubpo& e = lubpos[pick(rng)];
      for (RuleClass rc : {RuleClass::sazonov, RuleClass::canonical}) {
        Lubpo dc = class_completion(d, rc);
        Lubpo ec = class_completion(e, rc);
        for (const MonoMap& f : all_continuous(d, e)) CHECK(is_continuous(f, dc, ec));
      }
    }
  }
}
