#include "lubkit/category.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "lubkit/axioms.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/order.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kPairSetLimit = 22;     // |X| * |Y| when listing product naturals
constexpr std::size_t kFamilyLimit = 16;      // candidate families in an exponent
constexpr std::size_t kStateLimit = 1u << 22;  // image DP states

using PairFn = std::function<Elem(Elem, Elem)>;

/// Every image h(S) with S ⊆ X × Y, π₁S = X and π₂S = Y. With `top`, S must
/// contain it (the directed case).
std::vector<ElemSet> pair_images(ElemSet x, ElemSet y, std::size_t target_size,
                                 const PairFn& h,
                                 std::optional<std::pair<Elem, Elem>> top) {
  if (x.size() > 16 || y.size() > 16 || target_size > 32) {
    throw BoundExceeded("pair image search limited to 16 x 16 into 32 elements");
  }
  std::vector<Elem> xs(x.begin(), x.end());
  std::vector<Elem> ys(y.begin(), y.end());
  auto pack = [](std::uint64_t xm, std::uint64_t ym, std::uint64_t img) {
    return (xm << 48) | (ym << 32) | img;
  };
  std::unordered_set<std::uint64_t> states;
  std::optional<std::pair<std::size_t, std::size_t>> top_rel;
  if (top) {
    auto ix = std::find(xs.begin(), xs.end(), top->first);
    auto iy = std::find(ys.begin(), ys.end(), top->second);
    if (ix == xs.end() || iy == ys.end()) return {};
    std::size_t i = ix - xs.begin(), j = iy - ys.begin();
    top_rel = {i, j};
    states.insert(pack(1ull << i, 1ull << j, 1ull << h(top->first, top->second)));
  } else {
    states.insert(0);
  }
  std::vector<std::uint64_t> buf;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (top_rel && top_rel->first == i && top_rel->second == j) continue;
      const std::uint64_t add = pack(1ull << i, 1ull << j, 1ull << h(xs[i], ys[j]));
      buf.assign(states.begin(), states.end());
      for (std::uint64_t s : buf) states.insert(s | add);
      if (states.size() > kStateLimit) throw BoundExceeded("pair image search too large");
    }
  }
  const std::uint64_t full = pack((1ull << xs.size()) - 1, (1ull << ys.size()) - 1, 0);
  std::vector<ElemSet> out;
  for (std::uint64_t s : states) {
    if ((s & ~0xffffffffull) == full) out.emplace_back(s & 0xffffffffull);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_directed_natural(const Lubpo& l, const Natural& n) {
  return l.mode() == Mode::directed || is_directed(l.poset(), n.set);
}

/// Continuity of h : L × R → T where the product is never materialized.
bool continuous_on_pairs(const Lubpo& l, const Lubpo& r, const Lubpo& t, const PairFn& h) {
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < r.size(); ++b) {
      for (Elem a2 : l.poset().up(a)) {
        for (Elem b2 : r.poset().up(b)) {
          if (!t.poset().leq(h(a, b), h(a2, b2))) return false;
        }
      }
    }
  }
  for (const Natural& x : l.naturals()) {
    if (!is_directed_natural(l, x)) continue;
    for (const Natural& y : r.naturals()) {
      if (!is_directed_natural(r, y)) continue;
      const Elem want = h(x.lub, y.lub);
      for (ElemSet img : pair_images(x.set, y.set, t.size(), h,
                                     std::pair{x.lub, y.lub})) {
        if (t.natural_lub(img) != want) return false;
      }
    }
  }
  return true;
}

std::vector<MonoMap> continuous_maps(const Lubpo& d, const Lubpo& e, std::size_t cap) {
  std::vector<MonoMap> out;
  for_each_monotone_map(d.poset(), e.poset(), [&](std::span<const Elem> t) {
    if (is_continuous(t, d, e)) {
      if (out.size() == cap) {
        throw BoundExceeded("more than " + std::to_string(cap) + " continuous maps");
      }
      out.push_back(MonoMap::trusted(e.size(), {t.begin(), t.end()}));
    }
    return true;
  });
  return out;
}

Poset pointwise_order(const std::vector<MonoMap>& maps, const Poset& target) {
  std::vector<std::pair<Elem, Elem>> rel;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    labels.push_back("f" + std::to_string(i));
    for (std::size_t j = 0; j < maps.size(); ++j) {
      bool le = i != j;
      for (std::size_t x = 0; le && x < maps[i].source_size(); ++x) {
        le = target.leq(maps[i](x), maps[j](x));
      }
      if (le) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relation(maps.size(), rel, std::move(labels));
}

std::vector<MonoMap> exp_carrier(const Lubpo& d, const Lubpo& e, std::size_t product_bound) {
  if (d.mode() != e.mode()) throw ModeMismatch("exponent of lubpos with different modes");
  if (d.size() * e.size() > product_bound) {
    throw BoundExceeded("|D| * |E| = " + std::to_string(d.size() * e.size()) +
                        " exceeds " + std::to_string(product_bound));
  }
  return continuous_maps(d, e, kMaxElements);
}

// (Fx, fx) natural for every x.
bool pointwise_natural(const FunctionSpace& fs, ElemSet family, Elem f) {
  for (Elem x = 0; x < fs.domain.size(); ++x) {
    ElemSet img;
    for (Elem g : family) img.insert(fs.carrier[g](x));
    if (fs.codomain.natural_lub(img) != fs.carrier[f](x)) return false;
  }
  return true;
}

// Maps below f that can sit in a pointwise natural family with top f:
// g(x) must lie in some natural of E with lub f(x).
ElemSet family_members(const FunctionSpace& fs, const Poset& order, Elem f) {
  const MonoMap& top = fs.carrier[f];
  std::vector<ElemSet> allowed(fs.domain.size());
  for (Elem x = 0; x < fs.domain.size(); ++x) {
    for (ElemSet n : fs.codomain.naturals_with_lub(top(x))) allowed[x] |= n;
  }
  ElemSet out;
  for (Elem g : order.down(f)) {
    bool ok = true;
    for (Elem x = 0; ok && x < fs.domain.size(); ++x) ok = allowed[x].contains(fs.carrier[g](x));
    if (ok) out.insert(g);
  }
  return out;
}

// Candidate natural families with lub f, for every f: families containing
// f in directed mode, any family of admissible members otherwise. Visited
// sets still need the pointwise check.
template <class Visit>
void for_each_candidate(const FunctionSpace& fs, const Poset& order, Visit&& visit) {
  const bool directed = fs.domain.mode() == Mode::directed;
  for (Elem f = 0; f < order.size(); ++f) {
    ElemSet members = family_members(fs, order, f);
    if (directed) {
      if (!members.contains(f)) continue;
      members.erase(f);
    }
    if (members.size() > kFamilyLimit) {
      throw BoundExceeded("too many families under '" + order.label(f) + "'");
    }
    for_each_subset(members, [&](ElemSet s) {
      if (directed) s.insert(f);
      visit(s, f);
    });
  }
}

}  // namespace

// --- product -----------------------------------------------------------------

ProductSpace product(const Lubpo& d, const Lubpo& e) {
  if (d.mode() != e.mode()) throw ModeMismatch("product of lubpos with different modes");
  const std::size_t n = d.size(), m = e.size();
  if (n * m > kMaxElements) {
    throw BoundExceeded("product carrier has " + std::to_string(n * m) + " elements");
  }
  const Poset& pd = d.poset();
  const Poset& pe = e.poset();
  std::vector<std::pair<Elem, Elem>> rel;
  std::vector<std::string> labels;
  std::vector<Elem> t1, t2;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < m; ++j) {
      labels.push_back("(" + pd.label(i) + "," + pe.label(j) + ")");
      t1.push_back(i);
      t2.push_back(j);
      for (Elem k : pd.up(i)) {
        for (Elem l : pe.up(j)) {
          if (k != i || l != j) rel.emplace_back(i * m + j, k * m + l);
        }
      }
    }
  }
  Poset order = Poset::from_relation(n * m, rel, std::move(labels));

  std::vector<ElemSet> sets;
  for (const Natural& x : d.naturals()) {
    for (const Natural& y : e.naturals()) {
      if (x.set.size() * y.set.size() > kPairSetLimit) {
        throw BoundExceeded("natural pair " + format_set(pd, x.set) + " x " +
                            format_set(pe, y.set) + " too large to list");
      }
      ElemSet u;
      for (Elem i : x.set) {
        for (Elem j : y.set) u.insert(i * m + j);
      }
      const Elem top = x.lub * m + y.lub;
      for_each_subset(u, [&](ElemSet s) {
        if (d.mode() == Mode::directed && !s.contains(top)) return;
        ElemSet p1, p2;
        for (Elem k : s) {
          p1.insert(k / m);
          p2.insert(k % m);
        }
        if (p1 == x.set && p2 == y.set) sets.push_back(s);
      });
    }
  }
  Lubpo l = Lubpo::trusted(order, std::move(sets), d.mode());
  return {d, e, std::move(l), MonoMap::trusted(n, std::move(t1)),
          MonoMap::trusted(m, std::move(t2))};
}

MonoMap pairing(const ProductSpace& p, const MonoMap& f, const MonoMap& g) {
  if (f.source_size() != g.source_size() || f.target_size() != p.left.size() ||
      g.target_size() != p.right.size()) {
    throw IndexError("pairing of maps with mismatched shapes");
  }
  std::vector<Elem> t(f.source_size());
  for (Elem c = 0; c < t.size(); ++c) t[c] = p.pair(f(c), g(c));
  return MonoMap::trusted(p.lubpo.size(), std::move(t));
}

MonoMap product_map(const ProductSpace& src, const ProductSpace& dst, const MonoMap& f,
                    const MonoMap& g) {
  if (f.source_size() != src.left.size() || g.source_size() != src.right.size() ||
      f.target_size() != dst.left.size() || g.target_size() != dst.right.size()) {
    throw IndexError("product of maps with mismatched shapes");
  }
  std::vector<Elem> t(src.lubpo.size());
  for (Elem a = 0; a < src.left.size(); ++a) {
    for (Elem b = 0; b < src.right.size(); ++b) t[src.pair(a, b)] = dst.pair(f(a), g(b));
  }
  return MonoMap::trusted(dst.lubpo.size(), std::move(t));
}

// --- exponents ---------------------------------------------------------------

const char* to_string(ExpFlavor f) {
  return f == ExpFlavor::pointwise ? "pointwise" : "general";
}

std::optional<Elem> FunctionSpace::index_of(const MonoMap& f) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), f);
  if (it != carrier.end() && *it == f) return static_cast<Elem>(it - carrier.begin());
  return std::nullopt;
}

FunctionSpace pointwise_exp(const Lubpo& d, const Lubpo& e, std::size_t product_bound) {
  FunctionSpace fs{d, e, exp_carrier(d, e, product_bound), {}, ExpFlavor::pointwise};
  Poset order = pointwise_order(fs.carrier, e.poset());
  std::vector<ElemSet> sets;
  for_each_candidate(fs, order, [&](ElemSet s, Elem f) {
    if (pointwise_natural(fs, s, f)) sets.push_back(s);
  });
  fs.lubpo = Lubpo::trusted(std::move(order), std::move(sets), d.mode());
  return fs;
}

FunctionSpace general_exp(const Lubpo& d, const Lubpo& e, std::size_t product_bound) {
  if (d.mode() != Mode::directed || e.mode() != Mode::directed) {
    throw ModeMismatch("the general exponent is defined for directed-mode lubpos");
  }
  FunctionSpace fs{d, e, exp_carrier(d, e, product_bound), {}, ExpFlavor::general};
  Poset order = pointwise_order(fs.carrier, e.poset());
  // eval(A) is directed with greatest element f(lub π₂A).
  const bool e_complete = e.naturals().size() == directed_subsets(e.poset()).size();
  std::vector<ElemSet> sets;
  for_each_candidate(fs, order, [&](ElemSet s, Elem f) {
    // Any A has a greatest pair (f, lub π₂A); A = F × {x} gives the
    // pointwise condition, checked first as a filter.
    if (!pointwise_natural(fs, s, f)) return;
    if (e_complete) {
      sets.push_back(s);
      return;
    }
    auto ev = [&](Elem g, Elem x) { return fs.carrier[g](x); };
    for (const Natural& x : d.naturals()) {
      const Elem want = fs.carrier[f](x.lub);
      for (ElemSet img : pair_images(s, x.set, e.size(), ev, std::pair{f, x.lub})) {
        if (e.natural_lub(img) != want) return;
      }
    }
    sets.push_back(s);
  });
  fs.lubpo = Lubpo::trusted(std::move(order), std::move(sets), d.mode());
  return fs;
}

Elem eval_apply(const FunctionSpace& fs, Elem f, Elem x) {
  if (f >= fs.carrier.size()) throw NotInCarrier("no function with index " + std::to_string(f));
  if (x >= fs.domain.size()) throw NotInCarrier("no element with index " + std::to_string(x));
  return fs.carrier[f](x);
}

MonoMap eval_map(const FunctionSpace& fs, const ProductSpace& p) {
  if (p.left.size() != fs.carrier.size() || p.right.size() != fs.domain.size()) {
    throw IndexError("product does not match the function space");
  }
  std::vector<Elem> t(p.lubpo.size());
  for (Elem f = 0; f < fs.carrier.size(); ++f) {
    for (Elem x = 0; x < fs.domain.size(); ++x) t[p.pair(f, x)] = fs.carrier[f](x);
  }
  return MonoMap::trusted(fs.codomain.size(), std::move(t));
}

bool eval_continuous(const FunctionSpace& fs) {
  return continuous_on_pairs(fs.lubpo, fs.domain, fs.codomain,
                             [&](Elem f, Elem x) { return fs.carrier[f](x); });
}

CurryResult curry_fn(const ProductSpace& p, const FunctionSpace& fs, const MonoMap& f) {
  if (f.source_size() != p.lubpo.size() || p.right.size() != fs.domain.size() ||
      f.target_size() != fs.codomain.size()) {
    throw IndexError("curry of a map with mismatched shape");
  }
  std::vector<Elem> t(p.left.size());
  for (Elem c = 0; c < p.left.size(); ++c) {
    std::vector<Elem> row(p.right.size());
    for (Elem x = 0; x < row.size(); ++x) row[x] = f(p.pair(c, x));
    auto idx = fs.index_of(MonoMap::trusted(fs.codomain.size(), std::move(row)));
    if (!idx) {
      throw NotInCarrier("curried map at '" + p.left.poset().label(c) +
                         "' is not continuous");
    }
    t[c] = *idx;
  }
  CurryResult r{MonoMap::trusted(fs.carrier.size(), std::move(t)), false};
  r.continuous = is_continuous(r.map, p.left, fs.lubpo);
  return r;
}

// --- Ī -----------------------------------------------------------------------

Lubpo bar_index(const Poset& i) {
  if (i.size() == 0 || !is_directed(i, i.all())) {
    throw NotDirectedPoset("index poset is not directed");
  }
  // A finite directed poset always has a greatest element, so no new top.
  std::vector<ElemSet> sets{i.all()};
  return Lubpo::trusted(i, std::move(sets), Mode::directed);
}

// --- laws --------------------------------------------------------------------

bool CccReport::all_hold() const {
  return eval_continuous &&
         std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.holds; });
}

CccReport ccc_laws(const Lubpo& c, const Lubpo& d, const Lubpo& e) {
  for (const Lubpo* l : {&c, &d, &e}) {
    if (l->size() > 3) throw BoundExceeded("law check limited to 3-element lubpos");
  }
  if (c.mode() != d.mode() || d.mode() != e.mode()) {
    throw ModeMismatch("law check needs a common mode");
  }
  CccReport rep;
  rep.codomain_s10 = check_axiom(e, Axiom::S10).holds;
  auto fail = [](LawCheck& law, std::string what) {
    if (law.holds) law.detail = std::move(what);
    law.holds = false;
  };

  const std::vector<std::string> one_label{"pt"};
  Lubpo one = Lubpo::trusted(Poset::chain(1, one_label), {}, c.mode());
  LawCheck terminal{"terminal", true, {}};
  for (const Lubpo* l : {&c, &d, &e}) {
    if (continuous_maps(*l, one, 2).size() != 1) fail(terminal, "not exactly one map into 1");
  }
  rep.laws.push_back(terminal);

  ProductSpace de = product(d, e);
  LawCheck proj{"projections", true, {}};
  if (!is_continuous(de.proj1, de.lubpo, d)) fail(proj, "first projection");
  if (!is_continuous(de.proj2, de.lubpo, e)) fail(proj, "second projection");
  rep.laws.push_back(proj);

  const auto cd_maps = continuous_maps(c, d, 1u << 20);
  const auto ce_maps = continuous_maps(c, e, 1u << 20);
  LawCheck pair_law{"pairing", true, {}};
  for (const MonoMap& f : cd_maps) {
    for (const MonoMap& g : ce_maps) {
      MonoMap h = pairing(de, f, g);
      if (!is_continuous(h, c, de.lubpo)) fail(pair_law, "pairing not continuous");
      if (de.proj1.after(h) != f || de.proj2.after(h) != g) fail(pair_law, "beta law");
    }
  }
  rep.laws.push_back(pair_law);

  LawCheck pair_unique{"pairing-unique", true, {}};
  for (const MonoMap& h : continuous_maps(c, de.lubpo, 1u << 20)) {
    MonoMap f = de.proj1.after(h), g = de.proj2.after(h);
    if (!is_continuous(f, c, d) || !is_continuous(g, c, e)) {
      fail(pair_unique, "projection of a continuous map");
    }
    if (pairing(de, f, g) != h) fail(pair_unique, "eta law");
  }
  rep.laws.push_back(pair_unique);

  ProductSpace cd = product(c, d);
  FunctionSpace fs = pointwise_exp(d, e);
  LawCheck curry_law{"curry", true, {}};
  for (const MonoMap& f : continuous_maps(cd.lubpo, e, 1u << 20)) {
    CurryResult r = curry_fn(cd, fs, f);
    if (!r.continuous) fail(curry_law, "curried map not continuous");
    for (Elem x = 0; x < c.size(); ++x) {
      for (Elem y = 0; y < d.size(); ++y) {
        if (eval_apply(fs, r.map(x), y) != f(cd.pair(x, y))) fail(curry_law, "beta law");
      }
    }
  }
  rep.laws.push_back(curry_law);

  LawCheck curry_unique{"curry-unique", true, {}};
  for (const MonoMap& h : continuous_maps(c, fs.lubpo, 1u << 20)) {
    std::vector<Elem> t(cd.lubpo.size());
    for (Elem x = 0; x < c.size(); ++x) {
      for (Elem y = 0; y < d.size(); ++y) t[cd.pair(x, y)] = eval_apply(fs, h(x), y);
    }
    MonoMap g = MonoMap::trusted(e.size(), std::move(t));
    if (!is_continuous(g, cd.lubpo, e)) {
      fail(curry_unique, "uncurried map not continuous");
      continue;
    }
    if (curry_fn(cd, fs, g).map != h) fail(curry_unique, "eta law");
  }
  rep.laws.push_back(curry_unique);

  rep.eval_continuous = eval_continuous(fs);
  return rep;
}

// --- curry search ------------------------------------------------------------

namespace {

std::vector<Lubpo> small_directed_lubpos(std::size_t max_size) {
  std::vector<Lubpo> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      std::vector<ElemSet> extra;
      for (ElemSet s : directed_subsets(p)) {
        if (s.size() > 1) extra.push_back(s);
      }
      if (extra.size() > 16) throw BoundExceeded("too many families to search");
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << extra.size()); ++m) {
        std::vector<ElemSet> sets;
        for (std::size_t k = 0; k < extra.size(); ++k) {
          if (m >> k & 1) sets.push_back(extra[k]);
        }
        out.push_back(Lubpo::trusted(p, std::move(sets), Mode::directed));
      }
    }
  }
  return out;
}

}  // namespace

CurrySearchReport curry_counterexample_search(std::size_t max_size, std::size_t map_budget) {
  CurrySearchReport rep;
  const std::vector<Lubpo> all = small_directed_lubpos(max_size);
  for (const Lubpo& d : all) {
    for (const Lubpo& e : all) {
      FunctionSpace fs = general_exp(d, e);
      for (const Lubpo& c : all) {
        ProductSpace cd = product(c, d);
        ++rep.triples;
        bool stop = false;
        for_each_monotone_map(cd.lubpo.poset(), e.poset(), [&](std::span<const Elem> t) {
          if (rep.maps == map_budget) {
            stop = true;
            return false;
          }
          if (!is_continuous(t, cd.lubpo, e)) return true;
          ++rep.maps;
          MonoMap f = MonoMap::trusted(e.size(), {t.begin(), t.end()});
          if (!curry_fn(cd, fs, f).continuous) rep.findings.push_back({c, d, e, f});
          return true;
        });
        if (stop) {
          rep.exhausted = false;
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace lubkit
