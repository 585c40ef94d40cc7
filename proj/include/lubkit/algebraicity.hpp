#pragma once

#include <optional>

#include "lubkit/lubpo.hpp"

namespace lubkit {

/// D⁰: the elements a such that every natural (B, b) with a ≤ b has some
/// b' ∈ B with a ≤ b'. Directed mode only (ModeMismatch).
ElemSet finite_elements(const Lubpo& d);

/// ↓⁰x = D⁰ ∩ ↓x.
ElemSet finite_below(const Lubpo& d, Elem x);

/// For every x, ↓⁰x is directed and natural with lub x.
bool is_algebraic(const Lubpo& d);

/// For every directed A with lub a: A is natural iff each b ∈ F below a
/// lies below some member of A.
bool determines(const Lubpo& d, ElemSet f);

struct FiniteDetermination {
  bool holds = false;
  std::optional<ElemSet> witness;  // an F that works
  bool by_finite_elements = false;  // F = D⁰ works
};

/// Tries F = D⁰, then every subset in mask order. The search throws
/// BoundExceeded above 5 elements.
FiniteDetermination is_finite_determined(const Lubpo& d);

struct AlgebraicityReport {
  ElemSet finite_elements;
  bool algebraic = false;
  FiniteDetermination finite_determined;
  /// finite-determined, or algebraic with directed S6.
  bool cdlubpo_implied = false;
};

AlgebraicityReport algebraicity_report(const Lubpo& d);

}  // namespace lubkit
