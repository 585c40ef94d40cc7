#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "lubkit/dense_set.hpp"
#include "lubkit/order.hpp"

namespace lubkit {

/// General mode admits natural subsets of any shape; directed mode only
/// directed ones.
enum class Mode { general, directed };

const char* to_string(Mode m);

/// A natural subset together with its lub.
struct Natural {
  ElemSet set;
  Elem lub = 0;
  friend auto operator<=>(const Natural&, const Natural&) = default;
};

/// A poset with designated natural subsets.
///
/// Invariants: every stored natural's lub is the actual lub of its set,
/// every singleton is natural, and in directed mode every natural is
/// directed. Naturals are kept sorted by set mask.
class Lubpo {
 public:
  Lubpo() = default;

  /// Validates claimed lubs. Throws LubMismatch, NotDirected,
  /// EmptySetWithoutBottom or NotInCarrier.
  static Lubpo make(Poset poset, std::span<const Natural> naturals,
                    Mode mode = Mode::general);
  /// Same as make, with lubs computed from the order.
  static Lubpo from_sets(Poset poset, std::span<const ElemSet> sets,
                         Mode mode = Mode::general);
  /// Skips validation; sets must have lubs (and be directed in directed
  /// mode). Singletons are still added.
  static Lubpo trusted(Poset poset, std::vector<ElemSet> sets, Mode mode);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Mode mode() const { return mode_; }

  const std::vector<Natural>& naturals() const { return naturals_; }
  /// Natural sets whose lub is `x`, in mask order.
  const std::vector<ElemSet>& naturals_with_lub(Elem x) const { return by_lub_[x]; }
  bool is_natural(ElemSet s) const;
  std::optional<Elem> natural_lub(ElemSet s) const;

  /// Same poset and mode, new family (singletons added, trusted).
  Lubpo with_sets(std::vector<ElemSet> sets) const {
    return trusted(poset_, std::move(sets), mode_);
  }
  std::vector<ElemSet> sets() const;

  /// Equal order, mode and naturals; labels are ignored.
  bool same_structure(const Lubpo& o) const {
    return mode_ == o.mode_ && poset_.same_order(o.poset_) && naturals_ == o.naturals_;
  }
  bool operator==(const Lubpo& o) const {
    return mode_ == o.mode_ && poset_ == o.poset_ && naturals_ == o.naturals_;
  }

 private:
  Lubpo(Poset poset, Mode mode, std::vector<Natural> naturals);

  Poset poset_;
  Mode mode_ = Mode::general;
  std::vector<Natural> naturals_;
  std::vector<std::vector<ElemSet>> by_lub_;
  DenseSet dense_;  // indexed by mask; empty when the carrier is large
};

/// δ(D): the directed naturals of D as a directed-mode lubpo.
Lubpo delta_restrict(const Lubpo& d);

/// A ⊴ B: every a in A lies below a member of B or is the natural lub of
/// a subset of B.
bool under_rel(const Lubpo& d, ElemSet a, ElemSet b);

/// Which naturals a continuous map must preserve.
enum class Preserve { directed, all };

/// Monotone and maps preserved naturals (A, a) to naturals (fA, fa).
bool is_continuous(const MonoMap& f, const Lubpo& d, const Lubpo& e,
                   Preserve p = Preserve::directed);
/// First natural of d whose image breaks continuity, if any. Returns
/// nullopt for a continuous map; throws NotMonotone for a non-monotone one.
std::optional<Natural> continuity_witness(const MonoMap& f, const Lubpo& d,
                                          const Lubpo& e,
                                          Preserve p = Preserve::directed);
bool is_continuous(std::span<const Elem> table, const Lubpo& d, const Lubpo& e,
                   Preserve p = Preserve::directed);

/// Every directed subset of p, in mask order. Uses that a finite directed
/// set has a greatest element.
std::vector<ElemSet> directed_subsets(const Poset& p);
/// Every subset of p that has a lub, in mask order.
std::vector<ElemSet> subsets_with_lub(const Poset& p);

/// Directed-mode lubpo in which every directed set is natural.
Lubpo all_directed_natural(const Poset& p);

}  // namespace lubkit
