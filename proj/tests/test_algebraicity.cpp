#include <random>

#include "doctest.h"
#include "lubkit/algebraicity.hpp"
#include "lubkit/axioms.hpp"
#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/rule_classes.hpp"
#include "support.hpp"

using namespace lubkit;
using testing_support::small_lubpos;

TEST_CASE("finite elements and algebraicity on fixtures") {
  Lubpo full = fixtures::diamond(Mode::directed, true);
  CHECK(finite_elements(full) == full.poset().all());
  CHECK(is_algebraic(full));
  FiniteDetermination fd = is_finite_determined(full);
  CHECK(fd.holds);
  CHECK(fd.by_finite_elements);
  CHECK(fd.witness == full.poset().all());

  Lubpo bare = fixtures::diamond();
  CHECK(finite_elements(bare) == bare.poset().all());
  CHECK(finite_below(bare, 1) == ElemSet{0, 1});
  CHECK_FALSE(is_algebraic(bare));
  CHECK_FALSE(is_finite_determined(bare).holds);
  CHECK_FALSE(determines(bare, ElemSet{}));

  Lubpo one = fixtures::terminal();
  CHECK(finite_elements(one) == ElemSet{0});
  CHECK(is_algebraic(one));
  CHECK(is_finite_determined(one).holds);

  CHECK_THROWS_AS(finite_elements(fixtures::p7()), ModeMismatch);
  CHECK_THROWS_AS(is_finite_determined(fixtures::chain(6)), BoundExceeded);
  CHECK(is_finite_determined(fixtures::chain(8, Mode::directed, true)).holds);
}

TEST_CASE("finite elements below a closure point lie below a generator") {
  auto lubpos = small_lubpos(4, Mode::directed);
  std::mt19937 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, lubpos.size() - 1);
  std::size_t hits = 0;
  for (int k = 0; k < 2000; ++k) {
    const Lubpo& d = lubpos[pick(rng)];
    ElemSet a(std::uniform_int_distribution<std::uint64_t>(0, (1u << d.size()) - 1)(rng));
    const ElemSet c = cl(d, a);
    for (Elem x : c & finite_elements(d)) {
      ++hits;
      CHECK(d.poset().up(x).intersects(a));
    }
  }
  CHECK(hits > 1000);
}

TEST_CASE("finite-determined and algebraic-with-S6 dlubpos are complete") {
  std::size_t fd = 0, alg = 0;
  for (const Lubpo& d : small_lubpos(4, Mode::directed)) {
    FiniteDetermination det = is_finite_determined(d);
    if (det.holds) {
      ++fd;
      CHECK(is_cdlubpo(d));
      CHECK(determines(d, *det.witness));
    }
    if (is_algebraic(d) && check_axiom(d, Axiom::S6).holds) {
      ++alg;
      CHECK(is_cdlubpo(d));
      CHECK(determines(d, finite_elements(d)));
    }
  }
  CHECK(fd > 0);
  CHECK(alg > 0);
}

TEST_CASE("algebraicity report") {
  AlgebraicityReport r = algebraicity_report(fixtures::chain(3, Mode::directed, true));
  CHECK(r.algebraic);
  CHECK(r.finite_determined.holds);
  CHECK(r.cdlubpo_implied);
  AlgebraicityReport s = algebraicity_report(fixtures::vee());
  CHECK_FALSE(s.algebraic);
}
