#include "lubkit/closure.hpp"

#include <algorithm>

#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

constexpr std::size_t kMaxDeductionNodes = std::size_t{1} << 20;

}  // namespace

ClosureTrace close_rules_traced(const RuleSystem& r, const DenseSet& start) {
  ClosureTrace t;
  t.closure = start;
  t.round.assign(r.universe, 0);
  t.reason.assign(r.universe, std::nullopt);
  for (std::uint32_t k = 1;; ++k) {
    DenseSet fresh(r.universe);
    bool grew = false;
    r.enumerate(t.closure, [&](const RuleInstance& rule) {
      Item c = rule.conclusion;
      if (t.closure.contains(c) || fresh.contains(c)) return;
      for (Item p : rule.premises) {
        if (!t.closure.contains(p)) {
          throw InvariantViolation("rule enumerator emitted a rule with an underived premise");
        }
      }
      fresh.insert(c);
      t.round[c] = k;
      t.reason[c] = rule;
      grew = true;
    });
    if (!grew) break;
    t.closure |= fresh;
    t.rounds = k;
  }
  return t;
}

DenseSet close_rules(const RuleSystem& r, const DenseSet& start) {
  return close_rules_traced(r, start).closure;
}

namespace {

std::size_t build_node(const ClosureTrace& t, const DenseSet& start, Item item,
                       Deduction& d) {
  if (d.nodes.size() >= kMaxDeductionNodes) {
    throw BoundExceeded("deduction tree exceeds " + std::to_string(kMaxDeductionNodes) +
                        " nodes");
  }
  std::size_t id = d.nodes.size();
  d.nodes.push_back({item, {}, {}, {}});
  if (start.contains(item)) return id;
  const RuleInstance& rule = *t.reason[item];
  d.nodes[id].rule = rule.rule;
  d.nodes[id].detail = rule.detail;
  std::vector<std::size_t> kids;
  kids.reserve(rule.premises.size());
  for (Item p : rule.premises) kids.push_back(build_node(t, start, p, d));
  d.nodes[id].premises = std::move(kids);
  return id;
}

}  // namespace

std::optional<Deduction> deduce(const RuleSystem& r, const ClosureTrace& trace,
                                const DenseSet& start, Item target) {
  (void)r;
  if (!trace.closure.contains(target)) return std::nullopt;
  Deduction d;
  d.root = build_node(trace, start, target, d);
  return d;
}

std::optional<Deduction> deduce(const RuleSystem& r, const DenseSet& start,
                                Item target) {
  if (target >= r.universe) return std::nullopt;
  ClosureTrace t = close_rules_traced(r, start);
  return deduce(r, t, start, target);
}

bool verify_deduction(const RuleSystem& r, const DenseSet& start,
                      const Deduction& d) {
  const std::size_t n = d.nodes.size();
  if (n == 0 || d.root >= n) return false;
  std::vector<int> parents(n, 0);
  for (const DeductionNode& node : d.nodes) {
    if (node.label >= r.universe) return false;
    for (std::size_t p : node.premises) {
      if (p >= n) return false;
      ++parents[p];
    }
  }
  if (parents[d.root] != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != d.root && parents[i] != 1) return false;
  }
  // Every node reachable from the root; with the parent counts above this
  // makes the structure a finite tree.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{d.root};
  seen[d.root] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t k = stack.back();
    stack.pop_back();
    for (std::size_t p : d.nodes[k].premises) {
      if (seen[p]) return false;
      seen[p] = 1;
      ++reached;
      stack.push_back(p);
    }
  }
  if (reached != n) return false;

  for (const DeductionNode& node : d.nodes) {
    if (start.contains(node.label)) {
      if (!node.premises.empty()) return false;
      continue;
    }
    RuleInstance inst;
    inst.conclusion = node.label;
    inst.rule = node.rule;
    inst.detail = node.detail;
    for (std::size_t p : node.premises) inst.premises.push_back(d.nodes[p].label);
    if (!r.admits(inst)) return false;
  }
  return true;
}

std::vector<Item> deduction_leaves(const Deduction& d) {
  std::vector<Item> out;
  for (const DeductionNode& node : d.nodes) {
    if (node.premises.empty() && node.rule.empty()) out.push_back(node.label);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- cl ----------------------------------------------------------------------

ElemSet close_under_naturals(const Poset& p, std::span<const Natural> naturals,
                             ElemSet a) {
  ElemSet cur = down_closure(p, a);
  for (;;) {
    ElemSet next = cur;
    for (const Natural& n : naturals) {
      if (n.set.subset_of(cur)) next |= p.down(n.lub);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

ElemSet cl(const Lubpo& d, ElemSet a) {
  return close_under_naturals(d.poset(), d.naturals(), a);
}

ElemSet cl_directed(const Lubpo& d, ElemSet a) {
  if (d.mode() == Mode::directed) return cl(d, a);
  std::vector<Natural> directed;
  for (const Natural& n : d.naturals()) {
    if (is_directed(d.poset(), n.set)) directed.push_back(n);
  }
  return close_under_naturals(d.poset(), directed, a);
}

bool is_closed(const Lubpo& d, ElemSet a) { return cl(d, a) == a; }

DenseSet to_dense(ElemSet s, std::size_t universe) {
  DenseSet out(universe);
  for (Elem x : s) out.insert(x);
  return out;
}

ElemSet to_elemset(const DenseSet& s) {
  ElemSet out;
  s.for_each([&](std::uint64_t i) { out.insert(static_cast<Elem>(i)); });
  return out;
}

RuleSystem cl_rule_system(const Lubpo& d, bool directed_only) {
  std::vector<Natural> naturals;
  for (const Natural& n : d.naturals()) {
    if (!directed_only || is_directed(d.poset(), n.set)) naturals.push_back(n);
  }
  const Poset& p = d.poset();
  RuleSystem r;
  r.universe = p.size();
  r.enumerate = [p, naturals](const DenseSet& current,
                              const std::function<void(const RuleInstance&)>& emit) {
    ElemSet cur = to_elemset(current);
    for (Elem x : cur) {
      for (Elem y : p.down(x) - cur) {
        emit({{x}, y, "down", p.label(y) + " <= " + p.label(x)});
      }
    }
    for (const Natural& n : naturals) {
      if (n.set.subset_of(cur) && !cur.contains(n.lub)) {
        std::vector<Item> prem(n.set.begin(), n.set.end());
        emit({std::move(prem), n.lub, "natural",
              format_set(p, n.set) + " -> " + p.label(n.lub)});
      }
    }
  };
  r.admits = [p, naturals](const RuleInstance& inst) {
    if (inst.conclusion >= p.size()) return false;
    if (inst.rule == "down") {
      return inst.premises.size() == 1 && inst.premises[0] < p.size() &&
             p.leq(inst.conclusion, inst.premises[0]);
    }
    if (inst.rule == "natural") {
      ElemSet s;
      for (Item i : inst.premises) {
        if (i >= p.size()) return false;
        s.insert(i);
      }
      for (const Natural& n : naturals) {
        if (n.set == s) return n.lub == inst.conclusion;
      }
      return false;
    }
    return false;
  };
  r.label = [p](Item i) { return p.label(i); };
  return r;
}

// --- lub-completion ----------------------------------------------------------

ClosedSetLattice::ClosedSetLattice(Lubpo host, std::vector<ElemSet> closed)
    : host_(std::move(host)), sets_(std::move(closed)) {
  std::sort(sets_.begin(), sets_.end());
}

std::optional<std::size_t> ClosedSetLattice::index_of(ElemSet s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it != sets_.end() && *it == s) return static_cast<std::size_t>(it - sets_.begin());
  return std::nullopt;
}

ElemSet ClosedSetLattice::join(ElemSet a, ElemSet b) const { return cl(host_, a | b); }

ElemSet ClosedSetLattice::join(std::span<const ElemSet> family) const {
  ElemSet u;
  for (ElemSet s : family) u |= s;
  return cl(host_, u);
}

Poset ClosedSetLattice::as_poset() const {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    labels.push_back(format_set(host_.poset(), sets_[i]));
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && sets_[i].subset_of(sets_[j])) pairs.emplace_back(i, j);
    }
  }
  return Poset::from_relation(sets_.size(), pairs, std::move(labels));
}

ClosedSetLattice lub_completion(const Lubpo& d) {
  const std::size_t n = d.size();
  std::vector<ElemSet> out;
  ElemSet a = cl(d, ElemSet{});
  for (;;) {
    out.push_back(a);
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.contains(i)) continue;
      ElemSet prefix = a & ElemSet::range(i);
      ElemSet b = cl(d, prefix | ElemSet::single(i));
      if ((b & ElemSet::range(i)) == prefix) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return ClosedSetLattice(d, std::move(out));
}

ElemSet in_embed(const Lubpo& d, Elem x) { return cl(d, ElemSet::single(x)); }

}  // namespace lubkit
