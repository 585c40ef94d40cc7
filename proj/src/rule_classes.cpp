#include "lubkit/rule_classes.hpp"

#include <algorithm>
#include <memory>

#include "lubkit/errors.hpp"
#include "s7_unions.hpp"

namespace lubkit {

namespace {

using detail::s7_unions;
using detail::union_closure;

constexpr std::size_t kMaskLimit = 16;
constexpr int kNoLub = -1;

void check_mask_size(const Poset& p) {
  if (p.size() > kMaskLimit) {
    throw BoundExceeded("subset families are limited to " + std::to_string(kMaskLimit) +
                        " elements");
  }
}

// lub of every subset, indexed by mask.
std::vector<int> lub_table(const Poset& p) {
  check_mask_size(p);
  std::vector<int> out(std::size_t{1} << p.size(), kNoLub);
  for_each_subset(p.all(), [&](ElemSet s) {
    if (auto l = lub(p, s)) out[s.bits()] = static_cast<int>(*l);
  });
  return out;
}

// A natural family over masks with a by-lub index.
struct Family {
  const Poset* p;
  const std::vector<int>* lubs;
  DenseSet has;
  std::vector<std::vector<ElemSet>> by_lub;

  Family(const Poset& poset, const std::vector<int>& table,
         std::span<const ElemSet> initial)
      : p(&poset), lubs(&table), has(table.size()), by_lub(poset.size()) {
    for (Elem x = 0; x < poset.size(); ++x) add(ElemSet::single(x));
    for (ElemSet s : initial) add(s);
  }

  int lub_of(ElemSet s) const { return (*lubs)[s.bits()]; }

  bool add(ElemSet s) {
    if (has.contains(s.bits())) return false;
    if (lub_of(s) == kNoLub) throw InvariantViolation("natural without a lub");
    has.insert(s.bits());
    by_lub[static_cast<Elem>(lub_of(s))].push_back(s);
    return true;
  }

  std::vector<ElemSet> sets() const {
    std::vector<ElemSet> out;
    has.for_each([&](std::uint64_t m) { out.push_back(ElemSet(m)); });
    return out;
  }

  std::vector<Natural> naturals() const {
    std::vector<Natural> out;
    has.for_each([&](std::uint64_t m) {
      out.push_back({ElemSet(m), static_cast<Elem>(lub_of(ElemSet(m)))});
    });
    return out;
  }
};

// Some natural X with lub x and X ⊆ ↓y (S6 premise), in mask order.
std::optional<ElemSet> s6_source(const Family& f, ElemSet y, Elem x) {
  ElemSet below = down_closure(*f.p, y);
  std::optional<ElemSet> best;
  for (ElemSet s : f.by_lub[x]) {
    if (s.subset_of(below) && (!best || s < *best)) best = s;
  }
  return best;
}

bool s6_round(Family& f) {
  bool grew = false;
  for (std::uint64_t m = 0; m < f.has.capacity(); ++m) {
    ElemSet y(m);
    int l = f.lub_of(y);
    if (l == kNoLub || f.has.contains(m)) continue;
    if (s6_source(f, y, static_cast<Elem>(l))) grew |= f.add(y);
  }
  return grew;
}

bool s7_round(Family& f) {
  std::vector<ElemSet> found;
  for (ElemSet z : f.sets()) {
    const int d = f.lub_of(z);
    s7_unions(f.by_lub, f.has.capacity(), z, [&](ElemSet u, const std::vector<ElemSet>&) {
      if (f.has.contains(u.bits())) return;
      if (f.lub_of(u) != d) throw InvariantViolation("S7 conclusion with a different lub");
      found.push_back(u);
    });
  }
  bool grew = false;
  for (ElemSet u : found) grew |= f.add(u);
  return grew;
}

bool is_s9_step(const Family& f, const std::vector<Natural>& nats, ElemSet b) {
  int l = f.lub_of(b);
  return l != kNoLub &&
         close_under_naturals(*f.p, nats, b).contains(static_cast<Elem>(l));
}

std::vector<ElemSet> restrict_mode(const Poset& p, std::vector<ElemSet> sets, Mode m) {
  if (m == Mode::general) return sets;
  std::erase_if(sets, [&](ElemSet s) { return !is_directed(p, s); });
  return sets;
}

}  // namespace

// --- lub-rules and validity ----------------------------------------------------

LubRule LubRule::make(Poset host, std::vector<ElemSet> pattern, ElemSet result) {
  auto check = [&](ElemSet s) {
    if (!s.subset_of(host.all())) throw NotInCarrier("rule set outside the host");
    if (!lub(host, s)) throw LubMismatch("rule set " + format_set(host, s) + " has no lub");
  };
  for (ElemSet s : pattern) check(s);
  check(result);
  std::sort(pattern.begin(), pattern.end());
  pattern.erase(std::unique(pattern.begin(), pattern.end()), pattern.end());
  return {std::move(host), std::move(pattern), result};
}

bool is_valid_rule(const LubRule& r) {
  std::vector<Natural> nats;
  for (ElemSet s : r.pattern) nats.push_back({s, *lub(r.host, s)});
  return close_under_naturals(r.host, nats, r.result).contains(*lub(r.host, r.result));
}

bool verify_counterexample(const LubRule& r, const Counterexample& c) {
  const auto& table = c.map.table();
  if (table.size() != r.host.size() || !is_monotone(r.host, c.target, table)) return false;
  auto respects = [&](ElemSet s) {
    auto l = lub(c.target, c.map.image(s));
    return l && *l == c.map(*lub(r.host, s));
  };
  for (ElemSet s : r.pattern) {
    if (!respects(s)) return false;
  }
  return !respects(r.result);
}

OracleVerdict validity_oracle(const LubRule& r, std::size_t max_target_size) {
  const Poset& p = r.host;
  check_mask_size(p);
  std::vector<std::pair<ElemSet, Elem>> pat;
  for (ElemSet s : r.pattern) pat.emplace_back(s, *lub(p, s));

  std::vector<ElemSet> closed;
  for_each_subset(p.all(), [&](ElemSet s) {
    for (Elem x : s) {
      if (!p.down(x).subset_of(s)) return;
    }
    for (const auto& [set, l] : pat) {
      if (set.subset_of(s) && !s.contains(l)) return;
    }
    closed.push_back(s);
  });

  // The embedding x ↦ ↓x respects lub A iff ↓a is the least closed superset of A.
  const Elem a = *lub(p, r.result);
  ElemSet join = p.all();
  for (ElemSet c : closed) {
    if (r.result.subset_of(c)) join &= c;
  }
  OracleVerdict v;
  v.valid = join == p.down(a);
  if (v.valid) return v;

  for (std::size_t k = 1; k <= max_target_size && !v.witness; ++k) {
    for (const Poset& q : enumerate_posets(k, true)) {
      for_each_monotone_map(p, q, [&](std::span<const Elem> t) {
        Counterexample c{q, MonoMap::trusted(q.size(), {t.begin(), t.end()})};
        if (verify_counterexample(r, c)) {
          v.witness = std::move(c);
          return false;
        }
        return true;
      });
      if (v.witness) break;
    }
  }
  if (!v.witness) {
    std::sort(closed.begin(), closed.end());
    std::vector<std::pair<Elem, Elem>> rel;
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j < closed.size(); ++j)
        if (i != j && closed[i].subset_of(closed[j])) rel.emplace_back(i, j);
    Poset lat = Poset::from_relation(closed.size(), rel);
    std::vector<Elem> table;
    for (Elem x = 0; x < p.size(); ++x) {
      auto it = std::lower_bound(closed.begin(), closed.end(), p.down(x));
      table.push_back(static_cast<Elem>(it - closed.begin()));
    }
    v.witness = Counterexample{lat, MonoMap::trusted(lat.size(), std::move(table))};
  }
  if (!verify_counterexample(r, *v.witness)) {
    throw InvariantViolation("validity oracle produced a bad counterexample");
  }
  return v;
}

// --- completions -----------------------------------------------------------------

const char* to_string(RuleClass c) {
  return c == RuleClass::sazonov ? "sazonov" : "canonical";
}

std::vector<ElemSet> sazonov_closure_s8(const Poset& p, std::span<const ElemSet> naturals) {
  const auto lubs = lub_table(p);
  Family f(p, lubs, naturals);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ElemSet> found;
    for (std::uint64_t m = 0; m < lubs.size(); ++m) {
      ElemSet b(m);
      if (lubs[m] == kNoLub || f.has.contains(m)) continue;
      ElemSet under = down_closure(p, b);
      for_each_subset(b, [&](ElemSet s) {
        if (f.has.contains(s.bits())) under.insert(static_cast<Elem>(f.lub_of(s)));
      });
      for (ElemSet a : f.by_lub[static_cast<Elem>(lubs[m])]) {
        if (a.subset_of(under)) {
          found.push_back(b);
          break;
        }
      }
    }
    for (ElemSet b : found) grew |= f.add(b);
  }
  return f.sets();
}

std::vector<ElemSet> sazonov_closure_s6_s7(const Poset& p,
                                           std::span<const ElemSet> naturals) {
  const auto lubs = lub_table(p);
  Family f(p, lubs, naturals);
  for (bool grew = true; grew;) {
    grew = s6_round(f);
    grew |= s7_round(f);
  }
  return f.sets();
}

std::vector<ElemSet> canonical_closure_s9(const Poset& p, std::span<const ElemSet> naturals,
                                          bool descending) {
  const auto lubs = lub_table(p);
  Family f(p, lubs, naturals);
  const std::uint64_t total = lubs.size();
  for (bool grew = true; grew;) {
    grew = false;
    if (descending) {
      for (std::uint64_t k = total; k-- > 0;) {
        ElemSet b(k);
        if (!f.has.contains(k) && is_s9_step(f, f.naturals(), b)) grew |= f.add(b);
      }
    } else {
      auto nats = f.naturals();
      std::vector<ElemSet> found;
      for (std::uint64_t k = 0; k < total; ++k) {
        ElemSet b(k);
        if (!f.has.contains(k) && is_s9_step(f, nats, b)) found.push_back(b);
      }
      for (ElemSet b : found) grew |= f.add(b);
    }
  }
  return f.sets();
}

Lubpo class_completion(const Lubpo& d, RuleClass c) {
  const Poset& p = d.poset();
  const auto initial = d.sets();
  std::vector<ElemSet> out;
  if (c == RuleClass::sazonov) {
    out = sazonov_closure_s8(p, initial);
    if (sazonov_closure_s6_s7(p, initial) != out) {
      throw InvariantViolation("S8 and S6/S7 completions differ");
    }
  } else {
    out = canonical_closure_s9(p, initial, false);
    if (canonical_closure_s9(p, initial, true) != out) {
      throw InvariantViolation("canonical completion depends on iteration order");
    }
  }
  return Lubpo::trusted(p, restrict_mode(p, std::move(out), d.mode()), d.mode());
}

std::optional<ElemSet> s9_witness(const Lubpo& d) {
  for (ElemSet a : directed_subsets(d.poset())) {
    Elem l = *lub(d.poset(), a);
    if (!d.is_natural(a) && cl_directed(d, a).contains(l)) return a;
  }
  return std::nullopt;
}

bool is_cdlubpo(const Lubpo& d) { return !s9_witness(d).has_value(); }

// --- class rule systems ----------------------------------------------------------

RuleSystem class_rule_system(const Poset& p, RuleClass c) {
  auto lubs = std::make_shared<const std::vector<int>>(lub_table(p));
  RuleSystem r;
  r.universe = lubs->size();
  r.label = [p](Item m) { return format_set(p, ElemSet(m)); };

  auto has_lub = [lubs](Item m) { return m < lubs->size() && (*lubs)[m] != kNoLub; };

  if (c == RuleClass::sazonov) {
    r.enumerate = [p, lubs](const DenseSet& current,
                            const std::function<void(const RuleInstance&)>& emit) {
      std::vector<ElemSet> sets;
      current.for_each([&](std::uint64_t m) {
        if ((*lubs)[m] != kNoLub) sets.push_back(ElemSet(m));
      });
      Family f(p, *lubs, sets);
      for (Elem x = 0; x < p.size(); ++x) {
        if (!current.contains(ElemSet::single(x).bits())) {
          emit({{}, ElemSet::single(x).bits(), "S3", p.label(x)});
        }
      }
      // Singletons are in the family even if absent from `current`; S7 and
      // S6 premises must be current items.
      auto in_current = [&](ElemSet s) { return current.contains(s.bits()); };
      for (ElemSet x : sets) {
        Elem l = static_cast<Elem>((*lubs)[x.bits()]);
        for_each_subset(p.down(l), [&](ElemSet y) {
          if (current.contains(y.bits()) || (*lubs)[y.bits()] != static_cast<int>(l)) return;
          if (!x.subset_of(down_closure(p, y))) return;
          emit({{x.bits()}, y.bits(), "S6",
                format_set(p, x) + " <= " + format_set(p, y) + " <= " + p.label(l)});
        });
      }
      for (ElemSet z : sets) {
        s7_unions(f.by_lub, f.has.capacity(), z, [&](ElemSet u, const std::vector<ElemSet>& choice) {
          if (current.contains(u.bits())) return;
          std::vector<Item> prem;
          std::size_t k = 0;
          bool ok = true;
          for (Elem m : z) {
            for (ElemSet g : f.by_lub[m]) {
              if (!g.subset_of(choice[k])) continue;
              if (!in_current(g)) {
                ok = false;
                break;
              }
              prem.push_back(g.bits());
            }
            ++k;
          }
          if (!ok) return;
          prem.push_back(z.bits());
          emit({std::move(prem), u.bits(), "S7", "lubs " + format_set(p, z)});
        });
      }
    };
    r.admits = [p, lubs, has_lub](const RuleInstance& inst) {
      if (!has_lub(inst.conclusion)) return false;
      for (Item m : inst.premises) {
        if (!has_lub(m)) return false;
      }
      const ElemSet y(inst.conclusion);
      const int ly = (*lubs)[inst.conclusion];
      if (inst.rule == "S3") {
        return inst.premises.empty() && y.size() == 1;
      }
      if (inst.rule == "S6") {
        if (inst.premises.size() != 1) return false;
        ElemSet x(inst.premises[0]);
        return (*lubs)[x.bits()] == ly && x.subset_of(down_closure(p, y));
      }
      if (inst.rule == "S7") {
        if (inst.premises.empty()) return false;
        ElemSet z(inst.premises.back());
        ElemSet lub_set, uni;
        for (std::size_t k = 0; k + 1 < inst.premises.size(); ++k) {
          lub_set.insert(static_cast<Elem>((*lubs)[inst.premises[k]]));
          uni |= ElemSet(inst.premises[k]);
        }
        return lub_set == z && uni == y && (*lubs)[z.bits()] == ly;
      }
      return false;
    };
    return r;
  }

  r.enumerate = [p, lubs](const DenseSet& current,
                          const std::function<void(const RuleInstance&)>& emit) {
    std::vector<ElemSet> sets;
    current.for_each([&](std::uint64_t m) {
      if ((*lubs)[m] != kNoLub) sets.push_back(ElemSet(m));
    });
    Lubpo host = Lubpo::trusted(p, sets, Mode::general);
    std::vector<Natural> nats;
    for (ElemSet s : sets) nats.push_back({s, static_cast<Elem>((*lubs)[s.bits()])});
    RuleSystem clr = cl_rule_system(host);
    for (std::uint64_t m = 0; m < lubs->size(); ++m) {
      if (current.contains(m) || (*lubs)[m] == kNoLub) continue;
      ElemSet b(m);
      Elem l = static_cast<Elem>((*lubs)[m]);
      if (!close_under_naturals(p, nats, b).contains(l)) continue;
      auto ded = deduce(clr, to_dense(b, p.size()), l);
      std::vector<Item> used;
      for (const DeductionNode& node : ded->nodes) {
        if (node.rule != "natural") continue;
        ElemSet s;
        for (std::size_t k : node.premises) s.insert(static_cast<Elem>(ded->nodes[k].label));
        used.push_back(s.bits());
      }
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      emit({std::move(used), m, "S9",
            p.label(l) + " in cl " + format_set(p, b)});
    }
  };
  r.admits = [p, lubs, has_lub](const RuleInstance& inst) {
    if (inst.rule != "S9" || !has_lub(inst.conclusion)) return false;
    std::vector<Natural> nats;
    for (Item m : inst.premises) {
      if (!has_lub(m)) return false;
      nats.push_back({ElemSet(m), static_cast<Elem>((*lubs)[m])});
    }
    return close_under_naturals(p, nats, ElemSet(inst.conclusion))
        .contains(static_cast<Elem>((*lubs)[inst.conclusion]));
  };
  return r;
}

std::optional<Deduction> derive_in_class(const Lubpo& d, RuleClass c, ElemSet target,
                                         Elem l) {
  const Poset& p = d.poset();
  check_mask_size(p);
  auto actual = lub(p, target);
  if (!actual || *actual != l) {
    throw LubMismatch("target " + format_set(p, target) + " does not have lub " +
                      p.label(l));
  }
  RuleSystem r = class_rule_system(p, c);
  DenseSet start(r.universe);
  for (const Natural& n : d.naturals()) start.insert(n.set.bits());
  return deduce(r, start, target.bits());
}

LubRule flatten_certificate(const Poset& p, const Deduction& d) {
  std::vector<ElemSet> pattern;
  for (Item m : deduction_leaves(d)) pattern.push_back(ElemSet(m));
  return LubRule::make(p, std::move(pattern), ElemSet(d.nodes[d.root].label));
}

}  // namespace lubkit
