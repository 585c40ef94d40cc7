#include "lubkit/realization.hpp"

#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

// Does f(a) = ⊔ f(A) hold in the target order?
bool respects(const Poset& target, const MonoMap& f, ElemSet a, Elem top) {
  return lub(target, f.image(a)) == f(top);
}

}  // namespace

Rpo make_rpo(Poset realizers, ElemSet proper) {
  if (!proper.subset_of(realizers.all())) {
    throw IndexError("proper elements outside the realizer carrier");
  }
  return {std::move(realizers), proper};
}

bool is_directed_complete(const Poset& p) {
  for (ElemSet s : directed_subsets(p)) {
    if (!lub(p, s)) return false;
  }
  return true;
}

Rdcpo make_rdcpo(Rpo rpo) {
  if (!is_directed_complete(rpo.realizers)) {
    throw InvariantViolation("realizer order is not directed-complete");
  }
  return {std::move(rpo)};
}

bool realizes(const Rpo& e, const Lubpo& d, const MonoMap& phi) {
  if (d.mode() != Mode::directed) throw ModeMismatch("realization is defined for dlubpos");
  if (phi.source_size() != d.size() || phi.target_size() != e.realizers.size()) return false;
  const Poset& p = d.poset();
  const Poset& r = e.realizers;
  ElemSet image;
  for (Elem x = 0; x < d.size(); ++x) image.insert(phi(x));
  if (image != e.proper || image.size() != d.size()) return false;
  for (Elem x = 0; x < d.size(); ++x) {
    for (Elem y = 0; y < d.size(); ++y) {
      if (p.leq(x, y) != r.leq(phi(x), phi(y))) return false;
    }
  }
  for (ElemSet a : directed_subsets(p)) {
    if (d.is_natural(a) != respects(r, phi, a, *lub(p, a))) return false;
  }
  return true;
}

std::pair<Rdcpo, MonoMap> canonical_realization(const Lubpo& d) {
  ClosedSetLattice lat = lub_completion(d);
  std::vector<Elem> table(d.size());
  ElemSet proper;
  for (Elem x = 0; x < d.size(); ++x) {
    table[x] = *lat.index_of(in_embed(d, x));
    proper.insert(table[x]);
  }
  Poset order = lat.as_poset();
  const std::size_t n = order.size();
  return {make_rdcpo(make_rpo(std::move(order), proper)),
          MonoMap::trusted(n, std::move(table))};
}

bool is_rdcpo_morphism(const Rdcpo& d, const Rdcpo& e, const MonoMap& f) {
  const Poset& src = d.rpo.realizers;
  const Poset& dst = e.rpo.realizers;
  if (f.source_size() != src.size() || f.target_size() != dst.size()) return false;
  if (!is_monotone(src, dst, f.table())) return false;
  for (ElemSet s : directed_subsets(src)) {
    if (!respects(dst, f, s, *lub(src, s))) return false;
  }
  return f.image(d.rpo.proper).subset_of(e.rpo.proper);
}

bool determined_by(const Lubpo& d, const std::vector<std::pair<MonoMap, Lubpo>>& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!is_continuous(k[i].first, d, k[i].second)) {
      throw NotContinuous(i, "map " + std::to_string(i) + " is not continuous");
    }
  }
  const Poset& p = d.poset();
  for (ElemSet a : directed_subsets(p)) {
    const Elem top = *lub(p, a);
    bool all = true;
    for (const auto& [f, target] : k) all = all && respects(target.poset(), f, a, top);
    if (all && !d.is_natural(a)) return false;
  }
  return true;
}

}  // namespace lubkit
