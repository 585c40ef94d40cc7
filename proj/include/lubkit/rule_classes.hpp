#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lubkit/closure.hpp"
#include "lubkit/lubpo.hpp"

namespace lubkit {

/// A lub-rule `pattern ⇝ result` over a host order. Every pattern member and
/// the result have lubs in the host.
struct LubRule {
  Poset host;
  std::vector<ElemSet> pattern;
  ElemSet result;

  /// Throws LubMismatch if a set lacks a lub, NotInCarrier for stray members.
  static LubRule make(Poset host, std::vector<ElemSet> pattern, ElemSet result);
};

/// lub(result) ∈ cl_P(result), where cl_P uses only the pattern sets.
bool is_valid_rule(const LubRule& r);

/// A monotone map into `target` that respects the pattern lubs but not the
/// lub of the result.
struct Counterexample {
  Poset target;
  MonoMap map;
};

struct OracleVerdict {
  bool valid = false;
  std::optional<Counterexample> witness;  // present iff !valid
};

/// Decides validity from the closed-set lattice of the pattern, built by
/// filtering every subset. For invalid rules it searches monotone maps into
/// posets of up to `max_target_size` elements and falls back to the lattice
/// embedding. Throws BoundExceeded for hosts above 16 elements.
OracleVerdict validity_oracle(const LubRule& r, std::size_t max_target_size = 3);
/// Replays a counterexample against the definition of validity.
bool verify_counterexample(const LubRule& r, const Counterexample& c);

enum class RuleClass { sazonov, canonical };
const char* to_string(RuleClass c);

/// Closures of a natural family over every subset with a lub (general
/// mode). Inputs need not contain singletons; outputs do, in mask order.
std::vector<ElemSet> sazonov_closure_s8(const Poset& p, std::span<const ElemSet> naturals);
std::vector<ElemSet> sazonov_closure_s6_s7(const Poset& p,
                                           std::span<const ElemSet> naturals);
/// Iterates the closure step to a fixpoint. `descending` visits subsets in
/// decreasing mask order and adds them one at a time; the default sweeps in
/// rounds.
std::vector<ElemSet> canonical_closure_s9(const Poset& p, std::span<const ElemSet> naturals,
                                          bool descending = false);

/// R-completion of D. Closes over all subsets, then keeps directed sets when
/// D is in directed mode. The Sazonov completion is computed both ways and
/// InvariantViolation is thrown if they differ; likewise for the two
/// canonical iteration orders.
Lubpo class_completion(const Lubpo& d, RuleClass c);

/// First directed A (mask order) with lub a, a ∈ cl_D(A) and A not natural.
std::optional<ElemSet> s9_witness(const Lubpo& d);
bool is_cdlubpo(const Lubpo& d);

/// Rule system over subset masks induced by the class on D's order. Sazonov
/// rules are named S3, S6, S7; the canonical rule is S9.
///
/// Premise layouts: S3 none; S6 {X}; S7 the members of X̄ followed by the
/// set of their lubs; S9 the natural sets used by the cl deduction.
RuleSystem class_rule_system(const Poset& p, RuleClass c);

/// Certificate deriving `target` from D's naturals (items are masks).
/// Throws LubMismatch if `lub` is not the lub of `target`.
std::optional<Deduction> derive_in_class(const Lubpo& d, RuleClass c, ElemSet target,
                                         Elem lub);

/// The rule `leaves ⇝ root` of a class certificate.
LubRule flatten_certificate(const Poset& p, const Deduction& d);

}  // namespace lubkit
