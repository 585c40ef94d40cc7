#include "lubkit/gallery.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>

#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/format.hpp"
#include "lubkit/rule_classes.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kSymbolicLimit = 4096;
constexpr std::size_t kLevelLimit = 1024;

void add_check(GalleryReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string idx(std::string_view base, std::size_t i) {
  return std::string(base) + "_" + std::to_string(i);
}

// --- g1 ----------------------------------------------------------------------

GalleryReport g1() {
  constexpr Elem a = 0, b = 1, c = 2, d = 3, e = 4;
  GalleryReport rep;
  rep.id = "g1";
  const Lubpo p7 = fixtures::p7();
  const Poset& p = p7.poset();
  const ElemSet target{c, d};

  const Lubpo saz = class_completion(p7, RuleClass::sazonov);
  const Lubpo can = class_completion(p7, RuleClass::canonical);
  add_check(rep, "a in cl{c,d}", cl(p7, target).contains(a));
  add_check(rep, "sazonov completion has {c,d} -> a", saz.natural_lub(target) == a);
  add_check(rep, "canonical completion has {c,d} -> a", can.natural_lub(target) == a);
  add_check(rep, "completions coincide", saz.same_structure(can),
            std::to_string(saz.naturals().size()) + " naturals");

  DenseSet start(std::size_t{1} << p7.size());
  for (const Natural& n : p7.naturals()) start.insert(n.set.bits());
  nlohmann::json certs = nlohmann::json::object();
  for (RuleClass rc : {RuleClass::sazonov, RuleClass::canonical}) {
    RuleSystem rs = class_rule_system(p, rc);
    auto ded = derive_in_class(p7, rc, target, a);
    const std::string name = std::string(to_string(rc)) + " certificate verifies";
    if (!ded) {
      add_check(rep, name, false, "no derivation");
      continue;
    }
    nlohmann::json j = certificate_json(rs, *ded);
    const bool verified = verify_deduction(rs, start, certificate_from_json(j));
    const bool valid = is_valid_rule(flatten_certificate(p, *ded));
    add_check(rep, name, verified && valid,
              std::to_string(ded->nodes.size()) + " nodes, flattened rule " +
                  (valid ? "valid" : "invalid"));
    certs[to_string(rc)] = std::move(j);
  }
  rep.certificate = std::move(certs);

  // The published list of non-trivial naturals with lub a.
  const std::vector<ElemSet> listed{{b, c}, {b, c, d}, {b, c, e}, {b, c, d, e}};
  std::vector<std::string> extra;
  for (ElemSet s : saz.naturals_with_lub(a)) {
    if (s.contains(a) || std::find(listed.begin(), listed.end(), s) != listed.end()) continue;
    extra.push_back(format_set(p, s));
  }
  if (!extra.empty()) {
    std::string all;
    for (const std::string& s : extra) all += (all.empty() ? "" : " ") + s;
    rep.errata.push_back(
        "the listed non-trivial naturals with lub a omit " + all +
        ", which both completions contain");
  }
  return rep;
}

// --- g2 ----------------------------------------------------------------------

// Elements of D (and C, with d_i as `low` and c_i as `high`) and E.
enum class K { low, high, prime, top, bot };
struct El {
  K k;
  std::size_t i = 0;
  bool operator==(const El&) const = default;
};

std::string show_d(El x) {
  switch (x.k) {
    case K::low: return idx("a", x.i);
    case K::high: return idx("b", x.i);
    default: return "b";
  }
}

std::string show_c(El x) {
  switch (x.k) {
    case K::low: return idx("d", x.i);
    case K::high: return idx("c", x.i);
    default: return "c";
  }
}

std::string show_e(El x) {
  switch (x.k) {
    case K::low: return idx("a", x.i);
    case K::high: return idx("b", x.i);
    case K::prime: return idx("b'", x.i);
    case K::top: return "b";
    case K::bot: return "bot";
  }
  return "?";
}

// a_i <= b_{i+1}, b_i <= b_{i+1}, top above everything. C has the same shape.
bool leq_d(El x, El y) {
  if (x == y || y.k == K::top) return true;
  if (x.k == K::top || y.k != K::high) return false;
  return x.k == K::low ? y.i >= x.i + 1 : y.i >= x.i;
}

// a_i <= b_{i+1}, b_i <= b'_i <= b_{i+1}, bot and top.
bool leq_e(El x, El y) {
  if (x == y || x.k == K::bot || y.k == K::top) return true;
  if (y.k == K::bot || x.k == K::top) return false;
  switch (x.k) {
    case K::low:
      return (y.k == K::high || y.k == K::prime) && y.i >= x.i + 1;
    case K::high:
      return (y.k == K::high || y.k == K::prime) && y.i >= x.i;
    case K::prime:
      return (y.k == K::high && y.i > x.i) || (y.k == K::prime && y.i >= x.i);
    default:
      return false;
  }
}

// curry(f)(x)(y); nullopt where the table refers to b'_0.
std::optional<El> bar(El x, El y, bool repaired) {
  const std::size_t n = x.i;
  if (x.k == K::top) {
    if (y.k == K::low) return y.i == 1 ? El{K::bot} : El{K::low, y.i - 1};
    if (y.k == K::high) return El{K::prime, y.i};
    return El{K::top};
  }
  if (x.k == K::high) {
    if (y.k == K::low) {
      if (y.i == 1 || y.i > n) return El{K::bot};
      return El{K::low, y.i - 1};
    }
    if (y.k == K::high && y.i < n) return El{K::prime, y.i};
    if (repaired) return El{K::prime, n};
    if (n == 1) return std::nullopt;
    return El{K::prime, n - 1};
  }
  if (y.k == K::low) {
    if (y.i == 1 || y.i >= n) return El{K::bot};
    return El{K::low, y.i - 1};
  }
  if (y.k == K::high && y.i < n) return El{K::prime, y.i};
  return El{K::high, n};
}

std::vector<El> d_range(std::size_t upto) {
  std::vector<El> out;
  for (std::size_t i = 1; i <= upto; ++i) {
    out.push_back({K::low, i});
    out.push_back({K::high, i});
  }
  out.push_back({K::top});
  return out;
}

struct Failure {
  std::string text;
};

// First failure of monotonicity of each curried map over `ys`.
std::optional<Failure> curried_monotone(const std::vector<El>& xs, const std::vector<El>& ys,
                                        bool repaired) {
  for (El x : xs) {
    for (El y : ys) {
      for (El y2 : ys) {
        if (!leq_d(y, y2)) continue;
        auto u = bar(x, y, repaired), v = bar(x, y2, repaired);
        if (!u || !v) {
          return Failure{show_c(x) + " at " + show_d(!u ? y : y2) + " refers to b'_0"};
        }
        if (!leq_e(*u, *v)) {
          return Failure{"bar " + show_c(x) + ": " + show_d(y) + " <= " + show_d(y2) +
                         " but " + show_e(*u) + " is not below " + show_e(*v)};
        }
      }
    }
  }
  return std::nullopt;
}

bool pointwise_leq(El f, El g, const std::vector<El>& ys) {
  for (El y : ys) {
    if (!leq_e(*bar(f, y, true), *bar(g, y, true))) return false;
  }
  return true;
}

GalleryReport g2(std::size_t n) {
  GalleryReport rep;
  rep.id = "g2";
  rep.bound = n;
  const std::vector<El> cs = d_range(n);
  const std::vector<El> ds = d_range(n + 2);

  auto mono = curried_monotone(cs, ds, true);
  add_check(rep, "curried maps monotone", !mono, mono ? mono->text : "");

  std::string detail;
  bool in_c = true;
  for (El x : cs) {
    for (El x2 : cs) {
      if (in_c && leq_d(x, x2) && !pointwise_leq(x, x2, ds)) {
        in_c = false;
        detail = show_c(x) + " <= " + show_c(x2);
      }
    }
  }
  add_check(rep, "curry monotone in C", in_c, detail);

  bool listed = true;
  detail.clear();
  auto rel = [&](El f, El g) {
    if (listed && !pointwise_leq(f, g, ds)) {
      listed = false;
      detail = "bar " + show_c(f) + " <= bar " + show_c(g);
    }
  };
  for (std::size_t i = 1; i < n; ++i) {
    rel({K::high, i}, {K::high, i + 1});
    rel({K::low, i}, {K::high, i + 1});
    rel({K::high, i}, {K::top});
    rel({K::low, i}, {K::low, i + 1});
    rel({K::high, i}, {K::low, i + 1});
  }
  add_check(rep, "function space relations", listed, detail);

  // A = {(bar c_i, a_i)} u {(bar d_i, b_i)}.
  bool directed = true;
  for (std::size_t i = 1; i < n && directed; ++i) {
    directed = pointwise_leq({K::high, i}, {K::low, i + 1}, ds) &&
               leq_d({K::low, i}, {K::high, i + 1}) &&
               pointwise_leq({K::low, i}, {K::low, i + 1}, ds) &&
               leq_d({K::high, i}, {K::high, i + 1});
  }
  add_check(rep, "witness directed", directed);

  // bar c is the pointwise limit of C': bar c_i and bar d_i agree with it
  // on every argument of index below i.
  bool limit = true;
  detail.clear();
  for (std::size_t i = 1; i <= n && limit; ++i) {
    for (El y : ds) {
      if (y.k == K::top || y.i >= i) continue;
      for (El x : {El{K::high, i}, El{K::low, i}}) {
        if (limit && *bar(x, y, true) != *bar({K::top}, y, true)) {
          limit = false;
          detail = "bar " + show_c(x) + " at " + show_d(y);
        }
      }
    }
  }
  add_check(rep, "C' converges pointwise to bar c", limit, detail);

  bool no_prime = true, cofinal = true;
  nlohmann::json witness = nlohmann::json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    El u = *bar({K::high, i}, {K::low, i}, true);
    El v = *bar({K::low, i}, {K::high, i}, true);
    no_prime = no_prime && u.k != K::prime && v.k != K::prime;
    cofinal = cofinal && v == El{K::high, i};
    witness.push_back({{"function", "c"}, {"argument", "a"}, {"index", i}, {"eval", show_e(u)}});
    witness.push_back({{"function", "d"}, {"argument", "b"}, {"index", i}, {"eval", show_e(v)}});
  }
  add_check(rep, "eval image has no b'", no_prime);
  add_check(rep, "eval image reaches every b_i", cofinal);

  bool f_lub = true;
  for (std::size_t m = 1; m <= n && f_lub; ++m) {
    for (std::size_t i = m; i <= n && f_lub; ++i) {
      for (std::size_t j = m; j <= n && f_lub; ++j) {
        El v = *bar({K::high, i}, {K::high, j}, true);
        f_lub = v.k == K::prime && v.i >= m;
      }
    }
  }
  add_check(rep, "f sends C' x D' to primes", f_lub);

  std::vector<El> from_two;
  std::copy_if(cs.begin(), cs.end(), std::back_inserter(from_two),
               [](El x) { return x.i != 1; });
  auto verbatim = curried_monotone(from_two, ds, false);
  rep.errata.push_back(
      "the published table sets bar c_n(b_i) = b'_(n-1) for i >= n and bar c_n(b) = "
      "b'_(n-1); this is undefined for n = 1" +
      (verbatim ? " and not monotone (" + verbatim->text + ")" : std::string()) +
      ". Checked with b'_n in those cells instead.");
  rep.certificate = {{"bound", n},
                     {"witness", witness},
                     {"conclusion", "eval A has lub b but contains no b'_i, so it is not "
                                    "natural; curry(f) is not continuous"}};
  add_check(rep, "certificate replays", verify_g2_certificate(rep.certificate));
  return rep;
}

}  // namespace

bool verify_g2_certificate(const nlohmann::json& cert) {
  struct Pair {
    El f, x;
    std::size_t i;
  };
  std::vector<Pair> a;
  std::size_t n = 0;
  try {
    n = cert.at("bound").get<std::size_t>();
    for (const auto& w : cert.at("witness")) {
      const std::string fn = w.at("function"), arg = w.at("argument");
      const std::size_t i = w.at("index");
      if (i == 0 || i > n || (fn != "c" && fn != "d") || (arg != "a" && arg != "b")) return false;
      const El f{fn == "c" ? K::high : K::low, i};
      const El x{arg == "a" ? K::low : K::high, i};
      const El v = *bar(f, x, true);
      if (w.at("eval").get<std::string>() != show_e(v) || v.k == K::prime) return false;
      a.push_back({f, x, i});
    }
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (a.empty()) return false;
  // Every b_i occurs as a second component, and pairs below the bound have
  // an upper bound in A.
  for (std::size_t i = 1; i <= n; ++i) {
    if (std::none_of(a.begin(), a.end(), [&](const Pair& p) { return p.x == El{K::high, i}; })) {
      return false;
    }
  }
  const std::vector<El> ds = d_range(n + 2);
  std::sort(a.begin(), a.end(), [](const Pair& p, const Pair& q) { return p.i < q.i; });
  for (const Pair& p : a) {
    for (const Pair& q : a) {
      if (std::max(p.i, q.i) >= n) continue;
      const bool bounded = std::any_of(a.begin(), a.end(), [&](const Pair& u) {
        return u.i >= std::max(p.i, q.i) && leq_d(p.x, u.x) && leq_d(q.x, u.x) &&
               pointwise_leq(p.f, u.f, ds) && pointwise_leq(q.f, u.f, ds);
      });
      if (!bounded) return false;
    }
  }
  return true;
}

namespace {

// --- g3 ----------------------------------------------------------------------

// Elements of the partial example: a, a_i, b_i, b_ij, finite X of (i, j).
struct G3El {
  enum Kind { a, ai, bi, bij, set } kind;
  std::size_t i = 0, j = 0;
  std::vector<std::pair<std::size_t, std::size_t>> members = {};  // sorted, for sets
};

bool g3_leq(const G3El& x, const G3El& y) {
  if (y.kind == G3El::a) return true;
  switch (x.kind) {
    case G3El::a:
      return false;
    case G3El::ai:
      return (y.kind == G3El::ai && y.i >= x.i) || (y.kind == G3El::bi && y.i >= x.i);
    case G3El::bi:
      return y.kind == G3El::bi && y.i == x.i;
    case G3El::bij:
      if (y.kind == G3El::bij) return y.i == x.i && y.j >= x.j;
      if (y.kind == G3El::bi) return y.i == x.i;
      if (y.kind == G3El::set) {
        return std::binary_search(y.members.begin(), y.members.end(), std::pair{x.i, x.j});
      }
      return false;
    case G3El::set:
      return y.kind == G3El::set &&
             std::includes(y.members.begin(), y.members.end(), x.members.begin(),
                           x.members.end());
  }
  return false;
}

enum G3Item : Item { kAiToA, kRows, kBiToA, kBToA, kBbarToA, kG3Items };

GalleryReport g3(std::size_t n) {
  GalleryReport rep;
  rep.id = "g3";
  rep.bound = n;
  using E = G3El;
  const E top{E::a};

  // S6 from {a_i} -> a: a_i <= b_i <= a.
  auto step1 = [n, top] {
    for (std::size_t i = 1; i <= n; ++i) {
      if (!g3_leq({E::ai, i}, {E::bi, i}) || !g3_leq({E::bi, i}, top)) return false;
    }
    return true;
  };
  // S7: the rows {b_ij}_j -> b_i cover B and their lubs form {b_i} -> a.
  auto step2 = [n] {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (!g3_leq({E::bij, i, j}, {E::bi, i})) return false;
        if (!g3_leq({E::bij, i, j}, {E::bij, i, j + 1})) return false;
        if (g3_leq({E::bi, i}, {E::bij, i, j})) return false;
      }
    }
    return true;
  };
  // S6 from B -> a: b_ij <= {b_ij} in Bbar, Bbar below a and directed.
  auto step3 = [n, top] {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        E single{E::set, 0, 0, {{i, j}}};
        if (!g3_leq({E::bij, i, j}, single) || !g3_leq(single, top)) return false;
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t l = 1; l <= n; ++l) {
            std::vector<std::pair<std::size_t, std::size_t>> both{{i, j}, {k, l}};
            std::sort(both.begin(), both.end());
            both.erase(std::unique(both.begin(), both.end()), both.end());
            const E up{E::set, 0, 0, both};
            const E other{E::set, 0, 0, {{k, l}}};
            if (!g3_leq(single, up) || !g3_leq(other, up)) return false;
          }
        }
      }
    }
    return true;
  };
  const bool s1 = step1(), s2 = step2(), s3 = step3();

  RuleSystem rs;
  rs.universe = kG3Items;
  rs.label = [](Item i) {
    static const char* names[] = {"{a_i} -> a", "{b_ij}_j -> b_i", "{b_i} -> a", "B -> a",
                                  "Bbar -> a"};
    return std::string(names[i]);
  };
  auto rules = [s1, s2, s3] {
    std::vector<RuleInstance> out;
    if (s1) out.push_back({{kAiToA}, kBiToA, "S6", "a_i <= b_i <= a"});
    if (s2) out.push_back({{kRows, kBiToA}, kBToA, "S7", "rows cover B"});
    if (s3) out.push_back({{kBToA}, kBbarToA, "S6", "b_ij <= {b_ij} <= a"});
    return out;
  }();
  rs.enumerate = [rules](const DenseSet& cur,
                         const std::function<void(const RuleInstance&)>& emit) {
    for (const RuleInstance& r : rules) {
      if (cur.contains(r.conclusion)) continue;
      if (std::all_of(r.premises.begin(), r.premises.end(),
                      [&](Item p) { return cur.contains(p); })) {
        emit(r);
      }
    }
  };
  rs.admits = [rules](const RuleInstance& inst) {
    return std::any_of(rules.begin(), rules.end(), [&](const RuleInstance& r) {
      return r.premises == inst.premises && r.conclusion == inst.conclusion &&
             r.rule == inst.rule;
    });
  };

  add_check(rep, "S6 side conditions for {b_i} -> a", s1);
  add_check(rep, "S7 side conditions for B -> a", s2);
  add_check(rep, "S6 side conditions for Bbar -> a", s3);

  DenseSet start(kG3Items);
  start.insert(kAiToA);
  start.insert(kRows);
  auto ded = deduce(rs, start, kBbarToA);
  add_check(rep, "derivation reaches Bbar -> a", ded && verify_deduction(rs, start, *ded),
            ded ? std::to_string(ded->nodes.size()) + " nodes" : "no derivation");
  if (ded) rep.certificate = certificate_json(rs, *ded);
  return rep;
}

// --- g4 ----------------------------------------------------------------------

// Level tokens under b_m: "all c_{mw} with |w| = k" (1 <= k <= m) and
// "all b_{mw} with |w| = k" (0 <= k < m; k = 0 is b_m itself).
struct Levels {
  std::size_t bound;
  // Items 0 .. per m: c levels then b levels, followed by `a`.
  std::vector<std::size_t> offset;
  Item a_item = 0;

  explicit Levels(std::size_t n) : bound(n), offset(n + 2, 0) {
    for (std::size_t m = 1; m <= n; ++m) offset[m + 1] = offset[m] + 2 * m;
    a_item = offset[n + 1];
  }
  Item c(std::size_t m, std::size_t k) const { return offset[m] + (k - 1); }
  Item b(std::size_t m, std::size_t k) const { return offset[m] + m + k; }
  std::string label(Item it) const {
    if (it == a_item) return "a";
    std::size_t m = 1;
    while (offset[m + 1] <= it) ++m;
    std::size_t r = it - offset[m];
    if (r < m) return "c[" + std::to_string(m) + "," + std::to_string(r + 1) + "]";
    return "b[" + std::to_string(m) + "," + std::to_string(r - m) + "]";
  }
};

GalleryReport g4(std::size_t n) {
  if (n > kLevelLimit) {
    throw BoundExceeded("g4 bound limited to " + std::to_string(kLevelLimit));
  }
  GalleryReport rep;
  rep.id = "g4";
  rep.bound = n;
  auto lv = std::make_shared<const Levels>(n);

  RuleSystem rs;
  rs.universe = lv->a_item + 1;
  rs.label = [lv](Item i) { return lv->label(i); };
  rs.enumerate = [lv](const DenseSet& cur,
                      const std::function<void(const RuleInstance&)>& emit) {
    bool all_b = true;
    for (std::size_t m = 1; m <= lv->bound; ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        // {c_{mwj}}_j -> b_{mw} for every w of length k - 1.
        if (cur.contains(lv->c(m, k)) && !cur.contains(lv->b(m, k - 1))) {
          emit({{lv->c(m, k)}, lv->b(m, k - 1), "natural", "row lubs at length " +
                                                               std::to_string(k - 1)});
        }
      }
      for (std::size_t k = 1; k < m; ++k) {
        // c_{mw} <= b_{mw}.
        if (cur.contains(lv->b(m, k)) && !cur.contains(lv->c(m, k))) {
          emit({{lv->b(m, k)}, lv->c(m, k), "down", "c below b at length " +
                                                        std::to_string(k)});
        }
      }
      all_b = all_b && cur.contains(lv->b(m, 0));
    }
    if (all_b && !cur.contains(lv->a_item)) {
      std::vector<Item> prem;
      for (std::size_t m = 1; m <= lv->bound; ++m) prem.push_back(lv->b(m, 0));
      emit({prem, lv->a_item, "natural-bounded", "B -> a, truncated at the bound"});
    }
  };
  rs.admits = [lv](const RuleInstance& inst) {
    for (std::size_t m = 1; m <= lv->bound; ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        if (inst.rule == "natural" && inst.conclusion == lv->b(m, k - 1)) {
          return inst.premises == std::vector<Item>{lv->c(m, k)};
        }
        if (inst.rule == "down" && k < m && inst.conclusion == lv->c(m, k)) {
          return inst.premises == std::vector<Item>{lv->b(m, k)};
        }
      }
    }
    if (inst.rule == "natural-bounded" && inst.conclusion == lv->a_item) {
      std::vector<Item> want;
      for (std::size_t m = 1; m <= lv->bound; ++m) want.push_back(lv->b(m, 0));
      return inst.premises == want;
    }
    return false;
  };

  DenseSet start(rs.universe);
  for (std::size_t m = 1; m <= n; ++m) start.insert(lv->c(m, m));
  ClosureTrace t = close_rules_traced(rs, start);

  bool reached = true, steps = true;
  std::string detail;
  for (std::size_t m = 1; m <= n; ++m) {
    const Item bm = lv->b(m, 0);
    if (!t.closure.contains(bm)) {
      reached = false;
      detail = "b_" + std::to_string(m) + " not reached";
      break;
    }
    if (t.round[bm] != 2 * m - 1) {
      steps = false;
      detail = "b_" + std::to_string(m) + " after " + std::to_string(t.round[bm]) + " steps";
    }
  }
  add_check(rep, "b_n reached for all n <= bound", reached, reached ? "" : detail);
  add_check(rep, "b_n takes 2n-1 steps", steps, steps ? "" : detail);

  auto ded = deduce(rs, t, start, lv->a_item);
  const bool ok = ded && verify_deduction(rs, start, *ded);
  add_check(rep, "a reached at the bound", ok,
            ded ? std::to_string(ded->nodes.size()) + " nodes" : "no derivation");
  if (ded) rep.certificate = certificate_json(rs, *ded);
  rep.out_of_scope.push_back("that Cbar -> a is not derivable from the axioms (infinite argument)");
  return rep;
}

}  // namespace

bool GalleryReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const GalleryCheck& c) { return c.pass; });
}

std::size_t default_gallery_bound(std::string_view id) {
  if (id == "g2" || id == "g3") return 64;
  if (id == "g4") return 16;
  return 0;
}

GalleryReport run_gallery(std::string_view id, std::optional<std::size_t> bound) {
  if (std::find(std::begin(kGalleryIds), std::end(kGalleryIds), id) == std::end(kGalleryIds)) {
    throw Error("unknown gallery '" + std::string(id) + "'");
  }
  if (id == "g1") return g1();
  const std::size_t n = bound.value_or(default_gallery_bound(id));
  if (n == 0) throw BoundExceeded("gallery bound must be at least 1");
  if (n > kSymbolicLimit) {
    throw BoundExceeded("gallery bound limited to " + std::to_string(kSymbolicLimit));
  }
  if (id == "g2") return g2(n);
  if (id == "g3") return g3(n);
  return g4(n);
}

nlohmann::json gallery_json(const GalleryReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const GalleryCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"id", r.id},         {"bound", r.bound},
          {"ok", r.ok()},       {"checks", checks},
          {"errata", r.errata}, {"out_of_scope", r.out_of_scope},
          {"certificate", r.certificate}};
}

}  // namespace lubkit
