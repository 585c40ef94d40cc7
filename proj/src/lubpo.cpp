#include "lubkit/lubpo.hpp"

#include <algorithm>

#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kDenseLimit = 16;
constexpr std::size_t kSubsetLimit = 24;

void check_in_carrier(const Poset& p, ElemSet s) {
  if (!s.subset_of(p.all())) {
    throw NotInCarrier("set " + std::to_string(s.bits()) +
                       " has members outside a carrier of size " +
                       std::to_string(p.size()));
  }
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::general ? "general" : "directed"; }

Lubpo::Lubpo(Poset poset, Mode mode, std::vector<Natural> naturals)
    : poset_(std::move(poset)), mode_(mode) {
  for (Elem x = 0; x < poset_.size(); ++x) {
    naturals.push_back({ElemSet::single(x), x});
  }
  std::sort(naturals.begin(), naturals.end());
  naturals.erase(std::unique(naturals.begin(), naturals.end()), naturals.end());
  naturals_ = std::move(naturals);
  by_lub_.assign(poset_.size(), {});
  for (const Natural& n : naturals_) by_lub_[n.lub].push_back(n.set);
  if (poset_.size() <= kDenseLimit) {
    dense_ = DenseSet(std::size_t{1} << poset_.size());
    for (const Natural& n : naturals_) dense_.insert(n.set.bits());
  }
}

Lubpo Lubpo::make(Poset poset, std::span<const Natural> naturals, Mode mode) {
  std::vector<Natural> checked;
  checked.reserve(naturals.size());
  for (const Natural& n : naturals) {
    check_in_carrier(poset, n.set);
    if (n.lub >= poset.size()) throw NotInCarrier("natural lub outside carrier");
    auto actual = lub(poset, n.set);
    if (n.set.empty() && !actual) {
      throw EmptySetWithoutBottom("the empty set is natural but there is no least element");
    }
    if (!actual) {
      throw LubMismatch("natural " + format_set(poset, n.set) + " -> " +
                        poset.label(n.lub) + " has no lub");
    }
    if (*actual != n.lub) {
      throw LubMismatch("natural " + format_set(poset, n.set) + " -> " +
                        poset.label(n.lub) + ": actual lub is " +
                        poset.label(*actual));
    }
    if (mode == Mode::directed && !is_directed(poset, n.set)) {
      throw NotDirected("natural " + format_set(poset, n.set) +
                        " is not directed");
    }
    checked.push_back(n);
  }
  return Lubpo(std::move(poset), mode, std::move(checked));
}

Lubpo Lubpo::from_sets(Poset poset, std::span<const ElemSet> sets, Mode mode) {
  std::vector<Natural> naturals;
  naturals.reserve(sets.size());
  for (ElemSet s : sets) {
    check_in_carrier(poset, s);
    auto l = lub(poset, s);
    if (!l) {
      if (s.empty()) {
        throw EmptySetWithoutBottom("the empty set is natural but there is no least element");
      }
      throw LubMismatch("set " + format_set(poset, s) + " has no lub");
    }
    naturals.push_back({s, *l});
  }
  return make(std::move(poset), naturals, mode);
}

Lubpo Lubpo::trusted(Poset poset, std::vector<ElemSet> sets, Mode mode) {
  std::vector<Natural> naturals;
  naturals.reserve(sets.size());
  for (ElemSet s : sets) naturals.push_back({s, *lub(poset, s)});
  return Lubpo(std::move(poset), mode, std::move(naturals));
}

bool Lubpo::is_natural(ElemSet s) const {
  if (poset_.size() <= kDenseLimit) {
    if (!s.subset_of(poset_.all())) return false;
    return dense_.contains(s.bits());
  }
  return natural_lub(s).has_value();
}

std::optional<Elem> Lubpo::natural_lub(ElemSet s) const {
  auto it = std::lower_bound(naturals_.begin(), naturals_.end(), s,
                             [](const Natural& n, ElemSet k) { return n.set < k; });
  if (it != naturals_.end() && it->set == s) return it->lub;
  return std::nullopt;
}

std::vector<ElemSet> Lubpo::sets() const {
  std::vector<ElemSet> out;
  out.reserve(naturals_.size());
  for (const Natural& n : naturals_) out.push_back(n.set);
  return out;
}

Lubpo delta_restrict(const Lubpo& d) {
  std::vector<ElemSet> kept;
  for (const Natural& n : d.naturals()) {
    if (is_directed(d.poset(), n.set)) kept.push_back(n.set);
  }
  return Lubpo::trusted(d.poset(), std::move(kept), Mode::directed);
}

bool under_rel(const Lubpo& d, ElemSet a, ElemSet b) {
  for (Elem x : a) {
    if (d.poset().up(x).intersects(b)) continue;
    bool covered = false;
    for (ElemSet s : d.naturals_with_lub(x)) {
      if (s.subset_of(b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::optional<Natural> continuity_witness(const MonoMap& f, const Lubpo& d,
                                          const Lubpo& e, Preserve p) {
  if (!is_monotone(d.poset(), e.poset(), f.table())) {
    throw NotMonotone("map is not monotone");
  }
  for (const Natural& n : d.naturals()) {
    if (p == Preserve::directed && d.mode() == Mode::general &&
        !is_directed(d.poset(), n.set)) {
      continue;
    }
    auto image_lub = e.natural_lub(f.image(n.set));
    if (!image_lub || *image_lub != f(n.lub)) return n;
  }
  return std::nullopt;
}

bool is_continuous(const MonoMap& f, const Lubpo& d, const Lubpo& e, Preserve p) {
  if (f.source_size() != d.size() || !is_monotone(d.poset(), e.poset(), f.table())) {
    return false;
  }
  return !continuity_witness(f, d, e, p).has_value();
}

bool is_continuous(std::span<const Elem> table, const Lubpo& d, const Lubpo& e,
                   Preserve p) {
  if (!is_monotone(d.poset(), e.poset(), table)) return false;
  return is_continuous(MonoMap::trusted(e.size(), {table.begin(), table.end()}), d,
                       e, p);
}

std::vector<ElemSet> directed_subsets(const Poset& p) {
  std::vector<ElemSet> out;
  for (Elem m = 0; m < p.size(); ++m) {
    ElemSet below = p.down(m) - ElemSet::single(m);
    if (below.size() > kSubsetLimit) {
      throw BoundExceeded("too many directed subsets under '" + p.label(m) + "'");
    }
    for_each_subset(below, [&](ElemSet s) {
      s.insert(m);
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> subsets_with_lub(const Poset& p) {
  if (p.size() > kSubsetLimit) {
    throw BoundExceeded("subset enumeration limited to " +
                        std::to_string(kSubsetLimit) + " elements");
  }
  std::vector<ElemSet> out;
  for_each_subset(p.all(), [&](ElemSet s) {
    if (lub(p, s)) out.push_back(s);
  });
  return out;
}

Lubpo all_directed_natural(const Poset& p) {
  return Lubpo::trusted(p, directed_subsets(p), Mode::directed);
}

}  // namespace lubkit
