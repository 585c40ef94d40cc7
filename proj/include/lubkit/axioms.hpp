#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lubkit/lubpo.hpp"

namespace lubkit {

enum class Axiom { S2, S3, S4_1_FWD, S4_1_BWD, S4_2, S5, S6, S7, S8, S9, S10 };

inline constexpr Axiom kAllAxioms[] = {Axiom::S2,  Axiom::S3, Axiom::S4_1_FWD,
                                       Axiom::S4_1_BWD, Axiom::S4_2, Axiom::S5,
                                       Axiom::S6,  Axiom::S7, Axiom::S8,
                                       Axiom::S9,  Axiom::S10};

const char* to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view s);

/// True for the axioms that only make sense on general-mode lubpos.
bool general_only(Axiom a);

/// A counterexample to an axiom.
///
/// Layouts of `sets`: S2, S5, S6, S8 {X, Y}; S9 {A}; S4_1_FWD, S4_1_BWD and
/// S7 the members of X̄ followed by the set of their lubs. S4_2 and S10 use
/// `index` and `family` instead: family[i * |I| + j] = y_ij.
struct AxiomWitness {
  std::vector<ElemSet> sets;
  std::optional<Poset> index;
  std::vector<Elem> family;
};

struct CheckReport {
  Axiom axiom = Axiom::S3;
  bool holds = true;
  std::optional<AxiomWitness> witness;
  bool exact = true;
};

/// Default index-poset bound for S4_2 and S10.
inline constexpr std::size_t kDefaultFamilyBound = 4;

/// Decides an axiom on d. In directed mode the quantified sets range over
/// directed sets; S2, S4_1_* , S7 and S8 throw ModeMismatch there.
/// S4_2 and S10 enumerate monotone families over directed index posets of
/// at most `bound` elements and report exact = false. Throws BoundExceeded
/// above 10 elements, except for S3 and for S5 (naturals of at most 20
/// elements).
CheckReport check_axiom(const Lubpo& d, Axiom a, std::optional<std::size_t> bound = {});

/// True iff `w` really violates axiom `a` in d.
bool witness_violates(const Lubpo& d, Axiom a, const AxiomWitness& w);

/// Directed index posets (those with a greatest element) of 1..bound
/// elements, one per isomorphism class.
std::vector<Poset> directed_index_posets(std::size_t bound);

}  // namespace lubkit
