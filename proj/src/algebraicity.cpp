#include "lubkit/algebraicity.hpp"

#include "lubkit/axioms.hpp"
#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kSearchLimit = 5;

void require_directed(const Lubpo& d) {
  if (d.mode() != Mode::directed) {
    throw ModeMismatch("algebraicity is defined for directed-mode lubpos");
  }
}

}  // namespace

ElemSet finite_elements(const Lubpo& d) {
  require_directed(d);
  const Poset& p = d.poset();
  ElemSet out;
  for (Elem a = 0; a < d.size(); ++a) {
    bool finite = true;
    for (const Natural& n : d.naturals()) {
      if (p.leq(a, n.lub) && !p.up(a).intersects(n.set)) {
        finite = false;
        break;
      }
    }
    if (finite) out.insert(a);
  }
  return out;
}

ElemSet finite_below(const Lubpo& d, Elem x) {
  return finite_elements(d) & d.poset().down(x);
}

bool is_algebraic(const Lubpo& d) {
  const ElemSet d0 = finite_elements(d);
  for (Elem x = 0; x < d.size(); ++x) {
    ElemSet below = d0 & d.poset().down(x);
    if (!is_directed(d.poset(), below) || d.natural_lub(below) != x) return false;
  }
  return true;
}

bool determines(const Lubpo& d, ElemSet f) {
  require_directed(d);
  const Poset& p = d.poset();
  for (ElemSet a : directed_subsets(p)) {
    const Elem top = *lub(p, a);
    bool right = true;
    for (Elem b : f & p.down(top)) {
      if (!p.up(b).intersects(a)) {
        right = false;
        break;
      }
    }
    if (right != d.is_natural(a)) return false;
  }
  return true;
}

FiniteDetermination is_finite_determined(const Lubpo& d) {
  const ElemSet d0 = finite_elements(d);
  if (determines(d, d0)) return {true, d0, true};
  if (d.size() > kSearchLimit) {
    throw BoundExceeded("finite-determined search limited to " +
                        std::to_string(kSearchLimit) + " elements");
  }
  FiniteDetermination out;
  for_each_subset(d.poset().all(), [&](ElemSet f) {
    if (!out.holds && determines(d, f)) {
      out.holds = true;
      out.witness = f;
    }
  });
  return out;
}

AlgebraicityReport algebraicity_report(const Lubpo& d) {
  AlgebraicityReport r;
  r.finite_elements = finite_elements(d);
  r.algebraic = is_algebraic(d);
  r.finite_determined = is_finite_determined(d);
  r.cdlubpo_implied = r.finite_determined.holds ||
                      (r.algebraic && check_axiom(d, Axiom::S6).holds);
  return r;
}

}  // namespace lubkit
