#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lubkit/dense_set.hpp"
#include "lubkit/lubpo.hpp"

namespace lubkit {

// --- generic rule systems ----------------------------------------------------

/// Index into the universe of a rule system.
using Item = std::uint64_t;

/// One rule `premises ⇝ conclusion`. `rule` names the rule schema; `detail`
/// is free text for certificates. Premise order may matter to `admits`.
struct RuleInstance {
  std::vector<Item> premises;
  Item conclusion = 0;
  std::string rule;
  std::string detail;
};

/// An intensional rule system over {0, ..., universe-1}.
///
/// `enumerate(current, emit)` must emit, in a deterministic order, at least
/// one rule for every item outside `current` that some rule with premises in
/// `current` concludes. Rules concluding items of `current` may be skipped.
/// `admits` decides membership of a single rule instance and is what
/// certificate verification trusts.
struct RuleSystem {
  std::size_t universe = 0;
  std::function<void(const DenseSet& current,
                      const std::function<void(const RuleInstance&)>& emit)>
      enumerate;
  std::function<bool(const RuleInstance&)> admits;
  std::function<std::string(Item)> label;
};

/// Closure with, for every derived item, the round it appeared in and the
/// first rule that produced it.
struct ClosureTrace {
  DenseSet closure;
  std::vector<std::uint32_t> round;  // 0 for start items, indexed by Item
  std::vector<std::optional<RuleInstance>> reason;
  std::size_t rounds = 0;
};

ClosureTrace close_rules_traced(const RuleSystem& r, const DenseSet& start);
DenseSet close_rules(const RuleSystem& r, const DenseSet& start);

struct DeductionNode {
  Item label = 0;
  std::vector<std::size_t> premises;  // node indices
  std::string rule;                   // empty for leaves
  std::string detail;
};

/// A finite deduction tree; node 0 need not be the root.
struct Deduction {
  std::vector<DeductionNode> nodes;
  std::size_t root = 0;
};

/// Certificate for `target` from `start`, or nullopt if not derivable.
/// Breadth-first by round; each item uses the first rule emitted for it.
std::optional<Deduction> deduce(const RuleSystem& r, const DenseSet& start,
                                Item target);
std::optional<Deduction> deduce(const RuleSystem& r, const ClosureTrace& trace,
                                const DenseSet& start, Item target);

/// Checks the tree shape, that leaves are exactly the nodes labelled in
/// `start`, and that every other node is admitted by `r`.
bool verify_deduction(const RuleSystem& r, const DenseSet& start,
                      const Deduction& d);

/// Labels of the leaves of a deduction.
std::vector<Item> deduction_leaves(const Deduction& d);

// --- cl ----------------------------------------------------------------------

/// Least superset of `a` closed downward and under the lubs of those
/// `naturals` it contains.
ElemSet close_under_naturals(const Poset& p, std::span<const Natural> naturals,
                             ElemSet a);

/// cl_D(A) using every natural of D.
ElemSet cl(const Lubpo& d, ElemSet a);
/// cl_D(A) using only the directed naturals of D.
ElemSet cl_directed(const Lubpo& d, ElemSet a);
bool is_closed(const Lubpo& d, ElemSet a);

/// Rules {x} ⇝ y for y <= x ("down") and A ⇝ a for naturals ("natural").
/// With `directed_only`, only directed naturals give rules.
RuleSystem cl_rule_system(const Lubpo& d, bool directed_only = false);

DenseSet to_dense(ElemSet s, std::size_t universe);
ElemSet to_elemset(const DenseSet& s);

// --- lub-completion ----------------------------------------------------------

/// All cl-closed subsets of a lubpo, ordered by inclusion.
class ClosedSetLattice {
 public:
  /// Closed sets are listed in mask order.
  ClosedSetLattice(Lubpo host, std::vector<ElemSet> closed);

  const Lubpo& host() const { return host_; }
  const std::vector<ElemSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  std::optional<std::size_t> index_of(ElemSet s) const;
  bool contains(ElemSet s) const { return index_of(s).has_value(); }

  ElemSet join(ElemSet a, ElemSet b) const;
  ElemSet join(std::span<const ElemSet> family) const;
  ElemSet meet(ElemSet a, ElemSet b) const { return a & b; }

  /// Inclusion order on the closed sets, labelled by their members.
  Poset as_poset() const;

 private:
  Lubpo host_;
  std::vector<ElemSet> sets_;
};

/// Enumerates closed sets with Ganter's NextClosure.
ClosedSetLattice lub_completion(const Lubpo& d);
/// in_D(d) = cl{d}.
ElemSet in_embed(const Lubpo& d, Elem x);

}  // namespace lubkit
