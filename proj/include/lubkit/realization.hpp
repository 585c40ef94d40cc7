#pragma once

#include <utility>
#include <vector>

#include "lubkit/lubpo.hpp"

namespace lubkit {

/// A poset of realizers with a designated set of proper elements. The
/// remaining realizers are blind.
struct Rpo {
  Poset realizers;
  ElemSet proper;

  ElemSet blind() const { return realizers.all() - proper; }
};

/// Throws IndexError if `proper` leaves the carrier.
Rpo make_rpo(Poset realizers, ElemSet proper);

/// An rpo whose realizer order is directed-complete.
struct Rdcpo {
  Rpo rpo;
};

/// Every directed set of realizers has a lub.
bool is_directed_complete(const Poset& p);

/// Throws InvariantViolation if the realizer order is not directed-complete.
Rdcpo make_rdcpo(Rpo rpo);

/// φ is an order isomorphism from D onto the proper part, and a directed A
/// with lub a is natural iff φa is the lub of φA among the realizers.
/// Directed mode only (ModeMismatch).
bool realizes(const Rpo& e, const Lubpo& d, const MonoMap& phi);

/// The closed sets of D under inclusion, with proper part in(|D|), together
/// with in : D → realizers.
std::pair<Rdcpo, MonoMap> canonical_realization(const Lubpo& d);

/// Monotone, preserves directed lubs, and maps proper elements to proper
/// elements.
bool is_rdcpo_morphism(const Rdcpo& d, const Rdcpo& e, const MonoMap& f);

/// Every directed A whose lub is respected by all maps in K is natural.
/// Throws NotContinuous with the position of the first map that is not a
/// continuous D → target.
bool determined_by(const Lubpo& d, const std::vector<std::pair<MonoMap, Lubpo>>& k);

}  // namespace lubkit
