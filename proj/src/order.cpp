#include "lubkit/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_labels(std::size_t n, const std::vector<std::string>& labels) {
  if (labels.size() != n) {
    throw IndexError("expected " + std::to_string(n) + " labels, got " +
                     std::to_string(labels.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error("empty element label");
    if (!seen.insert(l).second) throw Error("duplicate element label '" + l + "'");
  }
}

}  // namespace

Poset Poset::from_relation(std::size_t size,
                           std::span<const std::pair<Elem, Elem>> pairs,
                           std::vector<std::string> labels) {
  if (size > kMaxElements) {
    throw BoundExceeded("poset size " + std::to_string(size) + " exceeds " +
                        std::to_string(kMaxElements));
  }
  if (labels.empty()) labels = default_labels(size);
  check_labels(size, labels);

  Poset p;
  p.up_.assign(size, ElemSet{});
  for (Elem x = 0; x < size; ++x) p.up_[x].insert(x);
  for (auto [lo, hi] : pairs) {
    if (lo >= size || hi >= size) {
      throw IndexError("order pair (" + std::to_string(lo) + "," +
                       std::to_string(hi) + ") out of range for size " +
                       std::to_string(size));
    }
    p.up_[lo].insert(hi);
  }
  // Warshall on successor sets.
  for (Elem k = 0; k < size; ++k) {
    for (Elem x = 0; x < size; ++x) {
      if (p.up_[x].contains(k)) p.up_[x] |= p.up_[k];
    }
  }
  for (Elem x = 0; x < size; ++x) {
    for (Elem y : p.up_[x]) {
      if (y != x && p.up_[y].contains(x)) {
        throw CycleError("order relation makes '" + labels[x] + "' and '" +
                         labels[y] + "' mutually <=");
      }
    }
  }
  p.down_.assign(size, ElemSet{});
  for (Elem x = 0; x < size; ++x) {
    for (Elem y : p.up_[x]) p.down_[y].insert(x);
  }
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::antichain(std::size_t size, std::vector<std::string> labels) {
  return from_relation(size, std::span<const std::pair<Elem, Elem>>{},
                       std::move(labels));
}

Poset Poset::chain(std::size_t size, std::vector<std::string> labels) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i + 1 < size; ++i) pairs.emplace_back(i, i + 1);
  return from_relation(size, pairs, std::move(labels));
}

std::optional<Elem> Poset::find(std::string_view label) const {
  for (Elem x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : up_[x]) {
      if (y == x) continue;
      // Nothing strictly between x and y.
      ElemSet between = (up_[x] & down_[y]) - ElemSet{x, y};
      if (between.empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

Poset Poset::relabeled(std::vector<std::string> labels) const {
  check_labels(size(), labels);
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

std::string format_set(const Poset& p, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    if (!first) out += ',';
    first = false;
    out += x < p.size() ? p.label(x) : "?" + std::to_string(x);
  }
  out += '}';
  return out;
}

ElemSet upper_bounds(const Poset& p, ElemSet a) {
  ElemSet ub = p.all();
  for (Elem x : a) ub &= p.up(x);
  return ub;
}

ElemSet lower_bounds(const Poset& p, ElemSet a) {
  ElemSet lb = p.all();
  for (Elem x : a) lb &= p.down(x);
  return lb;
}

std::optional<Elem> lub(const Poset& p, ElemSet a) {
  const ElemSet ub = upper_bounds(p, a);
  for (Elem u : ub) {
    if (ub.subset_of(p.up(u))) return u;
  }
  return std::nullopt;
}

std::optional<Elem> least(const Poset& p) { return lub(p, ElemSet{}); }

std::optional<Elem> greatest(const Poset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.down(x) == p.all()) return x;
  }
  return std::nullopt;
}

bool is_directed(const Poset& p, ElemSet a) {
  if (a.empty()) return false;
  for (Elem x : a) {
    for (Elem y : a) {
      if (y <= x) continue;
      if (!(p.up(x) & p.up(y) & a).empty()) continue;
      return false;
    }
  }
  return true;
}

ElemSet down_closure(const Poset& p, ElemSet a) {
  ElemSet out;
  for (Elem x : a) out |= p.down(x);
  return out;
}

ElemSet up_closure(const Poset& p, ElemSet a) {
  ElemSet out;
  for (Elem x : a) out |= p.up(x);
  return out;
}

bool cofinal_leq(const Poset& p, ElemSet a, ElemSet b) {
  return a.subset_of(down_closure(p, b));
}

bool cofinal_leq(const Poset& p, ElemSet a, Elem b) {
  return a.subset_of(p.down(b));
}

ElemSet maximal(const Poset& p, ElemSet a) {
  ElemSet out;
  for (Elem x : a) {
    if ((p.up(x) & a) == ElemSet::single(x)) out.insert(x);
  }
  return out;
}

// --- MonoMap ---------------------------------------------------------------

bool is_monotone(const Poset& source, const Poset& target,
                 std::span<const Elem> table) {
  if (table.size() != source.size()) return false;
  for (Elem v : table) {
    if (v >= target.size()) return false;
  }
  for (Elem x = 0; x < source.size(); ++x) {
    for (Elem y : source.up(x)) {
      if (!target.leq(table[x], table[y])) return false;
    }
  }
  return true;
}

MonoMap MonoMap::make(const Poset& source, const Poset& target,
                      std::vector<Elem> table) {
  if (table.size() != source.size()) {
    throw IndexError("map table has " + std::to_string(table.size()) +
                     " entries for a source of size " +
                     std::to_string(source.size()));
  }
  for (Elem v : table) {
    if (v >= target.size()) {
      throw IndexError("map value " + std::to_string(v) +
                       " outside target of size " + std::to_string(target.size()));
    }
  }
  if (!is_monotone(source, target, table)) throw NotMonotone("map is not monotone");
  return MonoMap(target.size(), std::move(table));
}

MonoMap MonoMap::identity(const Poset& p) {
  std::vector<Elem> t(p.size());
  std::iota(t.begin(), t.end(), Elem{0});
  return MonoMap(p.size(), std::move(t));
}

MonoMap MonoMap::constant(const Poset& source, const Poset& target, Elem value) {
  if (value >= target.size()) throw IndexError("constant value out of range");
  return MonoMap(target.size(), std::vector<Elem>(source.size(), value));
}

ElemSet MonoMap::image(ElemSet a) const {
  ElemSet out;
  for (Elem x : a) out.insert(table_[x]);
  return out;
}

MonoMap MonoMap::after(const MonoMap& inner) const {
  if (inner.target_size() != source_size()) {
    throw IndexError("composition of maps with mismatched carriers");
  }
  std::vector<Elem> t(inner.source_size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = table_[inner(x)];
  return MonoMap(target_size_, std::move(t));
}

void for_each_monotone_map(const Poset& source, const Poset& target,
                           const std::function<bool(std::span<const Elem>)>& visit) {
  const std::size_t n = source.size();
  if (n == 0) {
    visit({});
    return;
  }
  if (target.size() == 0) return;
  std::vector<ElemSet> below(n), above(n);
  for (Elem x = 0; x < n; ++x) {
    ElemSet earlier = ElemSet::range(x);
    below[x] = (source.down(x) & earlier);
    above[x] = (source.up(x) & earlier);
  }
  std::vector<Elem> table(n, 0);
  bool stop = false;
  std::function<void(Elem)> rec = [&](Elem x) {
    if (stop) return;
    if (x == n) {
      if (!visit(table)) stop = true;
      return;
    }
    ElemSet candidates = target.all();
    for (Elem y : below[x]) candidates &= target.up(table[y]);
    for (Elem y : above[x]) candidates &= target.down(table[y]);
    for (Elem v : candidates) {
      table[x] = v;
      rec(x + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<MonoMap> enumerate_monotone_maps(const Poset& source,
                                             const Poset& target) {
  std::vector<MonoMap> out;
  for_each_monotone_map(source, target, [&](std::span<const Elem> t) {
    out.push_back(MonoMap::trusted(target.size(),
                                   std::vector<Elem>(t.begin(), t.end())));
    return true;
  });
  return out;
}

// --- enumeration -----------------------------------------------------------

std::size_t enumeration_cap(std::size_t fallback) {
  if (const char* env = std::getenv("LUBKIT_MAX_SIZE")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return fallback;
}

namespace {

constexpr std::size_t kMaxCanonical = 8;

// Relation bits of p read through `order` (new position -> old element).
std::uint64_t relation_code(const Poset& p, std::span<const Elem> order) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(order[i], order[j])) {
        code |= std::uint64_t{1} << (i * n + j);
      }
    }
  }
  return code;
}

struct CanonicalResult {
  std::uint64_t code;
  std::vector<Elem> order;
};

CanonicalResult canonicalize(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kMaxCanonical) {
    throw BoundExceeded("canonical form supports at most " +
                        std::to_string(kMaxCanonical) + " elements");
  }
  // Elements are sorted by an invariant key; only permutations inside
  // blocks of equal key are tried.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  auto key = [&](Elem x) {
    return std::pair(p.down(x).size(), p.up(x).size());
  };
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return std::pair(key(a), a) < std::pair(key(b), b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  CanonicalResult best{~std::uint64_t{0}, order};
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::uint64_t code = relation_code(p, order);
      if (code < best.code) best = {code, order};
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  if (n == 0) best.code = 0;
  return best;
}

Poset poset_from_strict_up(std::size_t n, const std::vector<ElemSet>& strict_up) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : strict_up[x]) pairs.emplace_back(x, y);
  }
  return Poset::from_relation(n, pairs);
}

std::vector<Poset> extend_labeled(const std::vector<Poset>& smaller) {
  std::vector<Poset> out;
  for (const Poset& q : smaller) {
    const std::size_t m = q.size();
    const ElemSet all = q.all();
    for_each_subset(all, [&](ElemSet below) {
      if (down_closure(q, below) != below) return;
      for_each_subset(all - below, [&](ElemSet above) {
        if (up_closure(q, above) != above) return;
        for (Elem d : below) {
          if (!above.subset_of(q.up(d))) return;
        }
        std::vector<std::pair<Elem, Elem>> pairs;
        for (Elem x = 0; x < m; ++x) {
          for (Elem y : q.up(x)) {
            if (y != x) pairs.emplace_back(x, y);
          }
        }
        for (Elem d : below) pairs.emplace_back(d, m);
        for (Elem u : above) pairs.emplace_back(m, u);
        out.push_back(Poset::from_relation(m + 1, pairs));
      });
    });
  }
  return out;
}

std::vector<Poset> extend_iso(const std::vector<Poset>& smaller) {
  std::map<std::uint64_t, Poset> reps;
  for (const Poset& q : smaller) {
    const std::size_t m = q.size();
    for_each_subset(q.all(), [&](ElemSet below) {
      if (down_closure(q, below) != below) return;
      std::vector<ElemSet> strict_up(m + 1);
      for (Elem x = 0; x < m; ++x) strict_up[x] = q.up(x) - ElemSet::single(x);
      for (Elem d : below) strict_up[d].insert(m);
      Poset candidate = poset_from_strict_up(m + 1, strict_up);
      std::uint64_t code = canonicalize(candidate).code;
      if (!reps.contains(code)) reps.emplace(code, canonical_form(candidate));
    });
  }
  std::vector<Poset> out;
  out.reserve(reps.size());
  for (auto& [code, p] : reps) out.push_back(std::move(p));
  return out;
}

std::mutex g_cache_mutex;
std::map<std::pair<std::size_t, bool>, std::vector<Poset>> g_cache;

}  // namespace

std::uint64_t canonical_code(const Poset& p) { return canonicalize(p).code; }

Poset canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  CanonicalResult c = canonicalize(p);
  std::vector<ElemSet> strict_up(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.code & (std::uint64_t{1} << (i * n + j))) strict_up[i].insert(j);
    }
  }
  return poset_from_strict_up(n, strict_up);
}

std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso,
                                    std::optional<std::size_t> bound) {
  const std::size_t cap = bound.value_or(enumeration_cap());
  if (n > cap) {
    throw BoundExceeded("poset enumeration for n=" + std::to_string(n) +
                        " exceeds bound " + std::to_string(cap));
  }
  if (n > kMaxCanonical) {
    throw BoundExceeded("poset enumeration supports at most " +
                        std::to_string(kMaxCanonical) + " elements");
  }
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find({n, up_to_iso}); it != g_cache.end()) {
      return it->second;
    }
  }
  std::vector<Poset> level{Poset{}};
  for (std::size_t m = 1; m <= n; ++m) {
    level = up_to_iso ? extend_iso(level) : extend_labeled(level);
  }
  if (!up_to_iso) {
    std::sort(level.begin(), level.end(), [](const Poset& a, const Poset& b) {
      std::vector<Elem> id(a.size());
      std::iota(id.begin(), id.end(), Elem{0});
      return relation_code(a, id) < relation_code(b, id);
    });
  }
  std::lock_guard lock(g_cache_mutex);
  g_cache.emplace(std::pair(n, up_to_iso), level);
  return level;
}

}  // namespace lubkit
