#include "lubkit/axioms.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"
#include "s7_unions.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kSetLimit = 10;
constexpr std::size_t kNaturalLimit = 20;

struct AxiomName {
  Axiom axiom;
  const char* name;
};

constexpr AxiomName kNames[] = {
    {Axiom::S2, "S2"},       {Axiom::S3, "S3"},   {Axiom::S4_1_FWD, "S4_1_FWD"},
    {Axiom::S4_1_BWD, "S4_1_BWD"}, {Axiom::S4_2, "S4_2"}, {Axiom::S5, "S5"},
    {Axiom::S6, "S6"},       {Axiom::S7, "S7"},   {Axiom::S8, "S8"},
    {Axiom::S9, "S9"},       {Axiom::S10, "S10"},
};

bool in_scope(const Lubpo& d, ElemSet s) {
  return d.mode() == Mode::general || is_directed(d.poset(), s);
}

CheckReport fail(Axiom a, AxiomWitness w, bool exact = true) {
  return {a, false, std::move(w), exact};
}

std::vector<std::vector<ElemSet>> by_lub(const Lubpo& d, bool nonempty) {
  std::vector<std::vector<ElemSet>> out(d.size());
  for (const Natural& n : d.naturals()) {
    if (!nonempty || !n.set.empty()) out[n.lub].push_back(n.set);
  }
  return out;
}

ElemSet lub_set(const Lubpo& d, std::span<const ElemSet> members) {
  ElemSet out;
  for (ElemSet m : members) out.insert(*d.natural_lub(m));
  return out;
}

// --- set-form axioms -------------------------------------------------------------

CheckReport check_s2(const Lubpo& d) {
  const Poset& p = d.poset();
  for (const Natural& x : d.naturals()) {
    std::optional<ElemSet> bad;
    for_each_subset(p.down(x.lub) - x.set, [&](ElemSet extra) {
      if (!bad && !d.is_natural(x.set | extra)) bad = x.set | extra;
    });
    if (bad) return fail(Axiom::S2, {{x.set, *bad}, {}, {}});
  }
  return {Axiom::S2, true, {}, true};
}

CheckReport check_s5(const Lubpo& d) {
  const Poset& p = d.poset();
  for (const Natural& y : d.naturals()) {
    if (y.set.size() > kNaturalLimit) {
      throw BoundExceeded("S5 check limited to naturals of " + std::to_string(kNaturalLimit) +
                          " elements");
    }
    std::optional<ElemSet> bad;
    for_each_subset(y.set, [&](ElemSet x) {
      if (bad || !in_scope(d, x) || !y.set.subset_of(down_closure(p, x))) return;
      if (!d.is_natural(x)) bad = x;
    });
    if (bad) return fail(Axiom::S5, {{*bad, y.set}, {}, {}});
  }
  return {Axiom::S5, true, {}, true};
}

CheckReport check_s6(const Lubpo& d) {
  const Poset& p = d.poset();
  for (const Natural& x : d.naturals()) {
    std::optional<ElemSet> bad;
    for_each_subset(p.down(x.lub), [&](ElemSet y) {
      if (bad || !in_scope(d, y) || !x.set.subset_of(down_closure(p, y))) return;
      if (!d.is_natural(y)) bad = y;
    });
    if (bad) return fail(Axiom::S6, {{x.set, *bad}, {}, {}});
  }
  return {Axiom::S6, true, {}, true};
}

// S7 and, with nonempty = true, the set form of S4(1⇒).
CheckReport check_transitivity(const Lubpo& d, Axiom a, bool nonempty) {
  const auto groups = by_lub(d, nonempty);
  const std::size_t universe = std::size_t{1} << d.size();
  for (const Natural& z : d.naturals()) {
    if (nonempty && z.set.empty()) continue;
    std::optional<AxiomWitness> w;
    detail::s7_unions(groups, universe, z.set,
                      [&](ElemSet u, const std::vector<ElemSet>& choice) {
                        if (w || d.is_natural(u)) return;
                        AxiomWitness out;
                        std::size_t k = 0;
                        for (Elem m : z.set) {
                          for (ElemSet g : groups[m])
                            if (g.subset_of(choice[k])) out.sets.push_back(g);
                          ++k;
                        }
                        out.sets.push_back(z.set);
                        w = std::move(out);
                      });
    if (w) return fail(a, std::move(*w));
  }
  return {a, true, {}, true};
}

// S4(1⇐) in set form: reachable (union, lub-set) pairs of nonempty
// collections of nonempty naturals.
CheckReport check_s4_1_bwd(const Lubpo& d) {
  const std::size_t n = d.size();
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<Natural> gens;
  for (const Natural& x : d.naturals())
    if (!x.set.empty()) gens.push_back(x);
  auto key = [&](ElemSet u, ElemSet l) { return u.bits() * side + l.bits(); };
  DenseSet seen(side * side);
  // parent state and the natural added to reach a state
  std::vector<std::pair<std::uint64_t, std::uint32_t>> parent(side * side);
  std::vector<std::uint64_t> queue;
  constexpr std::uint64_t kRoot = ~std::uint64_t{0};
  for (std::uint32_t g = 0; g < gens.size(); ++g) {
    std::uint64_t k = key(gens[g].set, ElemSet::single(gens[g].lub));
    if (seen.contains(k)) continue;
    seen.insert(k);
    parent[k] = {kRoot, g};
    queue.push_back(k);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::uint64_t k = queue[q];
    const ElemSet u(k / side), l(k % side);
    if (d.is_natural(u) && !d.is_natural(l)) {
      AxiomWitness w;
      for (std::uint64_t c = k; c != kRoot; c = parent[c].first)
        w.sets.push_back(gens[parent[c].second].set);
      std::reverse(w.sets.begin(), w.sets.end());
      w.sets.push_back(l);
      return fail(Axiom::S4_1_BWD, std::move(w));
    }
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      std::uint64_t nk = key(u | gens[g].set, l | ElemSet::single(gens[g].lub));
      if (seen.contains(nk)) continue;
      seen.insert(nk);
      parent[nk] = {k, g};
      queue.push_back(nk);
    }
  }
  return {Axiom::S4_1_BWD, true, {}, true};
}

// Elements under B: ↓B plus natural lubs of subsets of B.
ElemSet under_set(const Lubpo& d, ElemSet b) {
  ElemSet out = down_closure(d.poset(), b);
  for_each_subset(b, [&](ElemSet s) {
    if (auto l = d.natural_lub(s)) out.insert(*l);
  });
  return out;
}

CheckReport check_s8(const Lubpo& d) {
  const Poset& p = d.poset();
  const auto groups = by_lub(d, false);
  std::optional<AxiomWitness> w;
  for_each_subset(p.all(), [&](ElemSet b) {
    if (w || d.is_natural(b)) return;
    auto l = lub(p, b);
    if (!l) return;
    ElemSet under = under_set(d, b);
    for (ElemSet a : groups[*l]) {
      if (a.subset_of(under)) {
        w = AxiomWitness{{a, b}, {}, {}};
        return;
      }
    }
  });
  if (w) return fail(Axiom::S8, std::move(*w));
  return {Axiom::S8, true, {}, true};
}

ElemSet mode_cl(const Lubpo& d, ElemSet a) {
  return d.mode() == Mode::directed ? cl_directed(d, a) : cl(d, a);
}

CheckReport check_s9(const Lubpo& d) {
  const Poset& p = d.poset();
  std::optional<ElemSet> bad;
  for_each_subset(p.all(), [&](ElemSet a) {
    if (bad || !in_scope(d, a) || d.is_natural(a)) return;
    auto l = lub(p, a);
    if (l && mode_cl(d, a).contains(*l)) bad = a;
  });
  if (bad) return fail(Axiom::S9, {{*bad}, {}, {}});
  return {Axiom::S9, true, {}, true};
}

// --- family axioms ---------------------------------------------------------------

Poset square(const Poset& i) {
  const std::size_t k = i.size();
  std::vector<std::pair<Elem, Elem>> rel;
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b)
      for (Elem c = 0; c < k; ++c)
        for (Elem e = 0; e < k; ++e)
          if ((a != c || b != e) && i.leq(a, c) && i.leq(b, e))
            rel.emplace_back(a * k + b, c * k + e);
  return Poset::from_relation(k * k, rel);
}

constexpr std::size_t kFamilyLimit = 6;

struct FamilyRep {
  std::size_t index = 0;  // into directed_index_posets(bound)
  std::vector<Elem> table;
};

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
  }
};

// Sets are masks below 64 here, so a family of sets is itself a mask.
struct FamilyFacts {
  std::vector<FamilyRep> reps;
  // (image, diagonal) -> rep
  std::vector<std::pair<std::uint64_t, std::uint64_t>> s4_2;
  std::vector<std::size_t> s4_2_rep;
  // (set of rows and columns, diagonal) -> rep
  std::vector<std::pair<std::uint64_t, std::uint64_t>> s10;
  std::vector<std::size_t> s10_rep;
};

std::mutex g_cache_mutex;
std::map<std::pair<std::vector<std::uint64_t>, std::size_t>, std::shared_ptr<FamilyFacts>>
    g_cache;

std::shared_ptr<const FamilyFacts> family_facts(const Poset& p, std::size_t bound) {
  if (p.size() > kFamilyLimit) {
    throw BoundExceeded("family axioms are limited to " + std::to_string(kFamilyLimit) +
                        " elements");
  }
  std::vector<std::uint64_t> code;
  for (Elem x = 0; x < p.size(); ++x) code.push_back(p.up(x).bits());
  auto key = std::make_pair(code, bound);
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  auto facts = std::make_shared<FamilyFacts>();
  std::vector<std::int32_t> seen42(64 * 64, -1);
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, PairHash> seen10;
  const auto indices = directed_index_posets(bound);
  for (std::size_t ix = 0; ix < indices.size(); ++ix) {
    const Poset& i = indices[ix];
    const std::size_t k = i.size();
    Poset sq = square(i);
    for_each_monotone_map(sq, p, [&](std::span<const Elem> t) {
      std::uint64_t image = 0, diag = 0, lines = 0;
      for (Elem a = 0; a < k; ++a) {
        std::uint64_t row = 0, col = 0;
        for (Elem b = 0; b < k; ++b) {
          row |= std::uint64_t{1} << t[a * k + b];
          col |= std::uint64_t{1} << t[b * k + a];
        }
        image |= row;
        diag |= std::uint64_t{1} << t[a * k + a];
        lines |= std::uint64_t{1} << row;
        lines |= std::uint64_t{1} << col;
      }
      auto rep = [&] {
        facts->reps.push_back({ix, {t.begin(), t.end()}});
        return facts->reps.size() - 1;
      };
      std::int32_t& slot = seen42[image * 64 + diag];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(rep());
        facts->s4_2.emplace_back(image, diag);
        facts->s4_2_rep.push_back(static_cast<std::size_t>(slot));
      }
      if (!seen10.contains({lines, diag})) {
        std::size_t r = rep();
        seen10.emplace(std::make_pair(lines, diag), r);
        facts->s10.emplace_back(lines, diag);
        facts->s10_rep.push_back(r);
      }
      return true;
    });
  }
  std::lock_guard lock(g_cache_mutex);
  return g_cache.try_emplace(key, facts).first->second;
}

AxiomWitness family_witness(const FamilyFacts& f, std::size_t rep, std::size_t bound) {
  return {{}, directed_index_posets(bound)[f.reps[rep].index], f.reps[rep].table};
}

CheckReport check_s4_2(const Lubpo& d, std::size_t bound) {
  auto facts = family_facts(d.poset(), bound);
  for (std::size_t k = 0; k < facts->s4_2.size(); ++k) {
    auto [image, diag] = facts->s4_2[k];
    if (d.is_natural(ElemSet(image)) != d.is_natural(ElemSet(diag)))
      return fail(Axiom::S4_2, family_witness(*facts, facts->s4_2_rep[k], bound), false);
  }
  return {Axiom::S4_2, true, {}, false};
}

CheckReport check_s10(const Lubpo& d, std::size_t bound) {
  auto facts = family_facts(d.poset(), bound);
  for (std::size_t k = 0; k < facts->s10.size(); ++k) {
    auto [lines, diag] = facts->s10[k];
    if (d.is_natural(ElemSet(diag))) continue;
    bool premises = true;
    for (std::uint64_t m : ElemSet(lines)) {
      if (!d.is_natural(ElemSet(m))) {
        premises = false;
        break;
      }
    }
    if (premises) return fail(Axiom::S10, family_witness(*facts, facts->s10_rep[k], bound), false);
  }
  return {Axiom::S10, true, {}, false};
}

// Rows, columns, image and diagonal of a witness family, or nullopt if the
// witness is malformed.
struct FamilyView {
  std::vector<ElemSet> lines;
  ElemSet image, diag;
};

std::optional<FamilyView> view_family(const Lubpo& d, const AxiomWitness& w) {
  if (!w.index || !greatest(*w.index)) return std::nullopt;
  const std::size_t k = w.index->size();
  if (w.family.size() != k * k) return std::nullopt;
  for (Elem y : w.family)
    if (y >= d.size()) return std::nullopt;
  if (!is_monotone(square(*w.index), d.poset(), w.family)) return std::nullopt;
  FamilyView v;
  for (Elem a = 0; a < k; ++a) {
    ElemSet row, col;
    for (Elem b = 0; b < k; ++b) {
      row.insert(w.family[a * k + b]);
      col.insert(w.family[b * k + a]);
    }
    v.lines.push_back(row);
    v.lines.push_back(col);
    v.image |= row;
    v.diag.insert(w.family[a * k + a]);
  }
  return v;
}

bool members_ok(const Lubpo& d, std::span<const ElemSet> members, bool nonempty) {
  if (nonempty && members.empty()) return false;
  for (ElemSet m : members) {
    if (!d.is_natural(m) || (nonempty && m.empty())) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Axiom a) {
  for (const auto& n : kNames)
    if (n.axiom == a) return n.name;
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view s) {
  for (const auto& n : kNames)
    if (s == n.name) return n.axiom;
  return std::nullopt;
}

bool general_only(Axiom a) {
  return a == Axiom::S2 || a == Axiom::S4_1_FWD || a == Axiom::S4_1_BWD ||
         a == Axiom::S7 || a == Axiom::S8;
}

std::vector<Poset> directed_index_posets(std::size_t bound) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= bound; ++k) {
    for (const Poset& q : enumerate_posets(k, true, std::max<std::size_t>(bound, 6)))
      if (greatest(q)) out.push_back(q);
  }
  return out;
}

CheckReport check_axiom(const Lubpo& d, Axiom a, std::optional<std::size_t> bound) {
  if (d.mode() == Mode::directed && general_only(a)) {
    throw ModeMismatch(std::string(to_string(a)) + " is only checked in general mode");
  }
  // S3 and S5 only look inside the naturals.
  if (d.size() > kSetLimit && a != Axiom::S3 && a != Axiom::S5) {
    throw BoundExceeded("axiom checks are limited to " + std::to_string(kSetLimit) +
                        " elements");
  }
  switch (a) {
    case Axiom::S2: return check_s2(d);
    case Axiom::S3:
      for (Elem x = 0; x < d.size(); ++x)
        if (!d.is_natural(ElemSet::single(x)))
          return fail(a, {{ElemSet::single(x)}, {}, {}});
      return {a, true, {}, true};
    case Axiom::S4_1_FWD: return check_transitivity(d, a, true);
    case Axiom::S4_1_BWD: return check_s4_1_bwd(d);
    case Axiom::S4_2: return check_s4_2(d, bound.value_or(kDefaultFamilyBound));
    case Axiom::S5: return check_s5(d);
    case Axiom::S6: return check_s6(d);
    case Axiom::S7: return check_transitivity(d, a, false);
    case Axiom::S8: return check_s8(d);
    case Axiom::S9: return check_s9(d);
    case Axiom::S10: return check_s10(d, bound.value_or(kDefaultFamilyBound));
  }
  return {a, true, {}, true};
}

bool witness_violates(const Lubpo& d, Axiom a, const AxiomWitness& w) {
  const Poset& p = d.poset();
  const auto& s = w.sets;
  auto natural = [&](ElemSet x) { return d.is_natural(x); };
  switch (a) {
    case Axiom::S2: {
      if (s.size() != 2) return false;
      auto x = d.natural_lub(s[0]);
      return x && s[0].subset_of(s[1]) && cofinal_leq(p, s[1], *x) && !natural(s[1]);
    }
    case Axiom::S3:
      return s.size() == 1 && s[0].size() == 1 && !natural(s[0]);
    case Axiom::S5: {
      if (s.size() != 2) return false;
      return natural(s[1]) && s[0].subset_of(s[1]) && cofinal_leq(p, s[1], s[0]) &&
             in_scope(d, s[0]) && !natural(s[0]);
    }
    case Axiom::S6: {
      if (s.size() != 2) return false;
      auto x = d.natural_lub(s[0]);
      return x && cofinal_leq(p, s[0], s[1]) && cofinal_leq(p, s[1], *x) &&
             in_scope(d, s[1]) && !natural(s[1]);
    }
    case Axiom::S8: {
      if (s.size() != 2) return false;
      auto x = d.natural_lub(s[0]);
      return x && under_rel(d, s[0], s[1]) && cofinal_leq(p, s[1], *x) && !natural(s[1]);
    }
    case Axiom::S9: {
      if (s.size() != 1 || !in_scope(d, s[0]) || natural(s[0])) return false;
      auto l = lub(p, s[0]);
      return l && mode_cl(d, s[0]).contains(*l);
    }
    case Axiom::S4_1_FWD:
    case Axiom::S4_1_BWD:
    case Axiom::S7: {
      if (s.empty()) return false;
      std::span<const ElemSet> members(s.data(), s.size() - 1);
      if (!members_ok(d, members, a != Axiom::S7)) return false;
      if (lub_set(d, members) != s.back()) return false;
      ElemSet u;
      for (ElemSet m : members) u |= m;
      if (a == Axiom::S4_1_BWD) return natural(u) && !natural(s.back());
      return natural(s.back()) && !natural(u);
    }
    case Axiom::S4_2: {
      auto v = view_family(d, w);
      return v && natural(v->image) != natural(v->diag);
    }
    case Axiom::S10: {
      auto v = view_family(d, w);
      return v && std::all_of(v->lines.begin(), v->lines.end(), natural) &&
             !natural(v->diag);
    }
  }
  return false;
}

}  // namespace lubkit
