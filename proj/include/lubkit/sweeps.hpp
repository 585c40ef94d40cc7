#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lubkit/lubpo.hpp"

namespace lubkit {

/// Outcome of a property sweep. Each failure carries a replayable instance.
struct SweepReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // instances outside the size guards
  std::vector<std::string> failures = {};
  std::string note = {};

  bool ok() const { return failures.empty(); }
};

/// Every lubpo on 1..max_size elements: one order per isomorphism class,
/// every family of non-singleton candidate naturals (directed sets in
/// directed mode, sets with a lub otherwise).
std::vector<Lubpo> small_lubpos(std::size_t max_size, Mode mode);

/// Random order on n elements (up to isomorphism) with each candidate
/// natural kept with probability 1/4.
Lubpo random_lubpo(std::mt19937_64& rng, std::size_t n, Mode mode);

/// is_valid_rule against validity_oracle on every host up to max_size
/// (labelled orders), every pattern and every result over sets with lubs.
/// Invalid verdicts must come with a counterexample that replays.
SweepReport validity_agreement_sweep(std::size_t max_size);

/// is_cdlubpo(D) iff D is realized by its canonical realization, for every
/// dlubpo up to max_size; then `samples` random rpos with a random φ, where
/// every realized D must be a cdlubpo.
SweepReport realization_sweep(std::size_t max_size, std::size_t samples, std::uint64_t seed);

/// Sazonov certificates for random naturals of random completions on at
/// most max_size elements: each verifies and flattens to a valid rule.
SweepReport derived_rule_sweep(std::size_t samples, std::size_t max_size, std::uint64_t seed);

/// in_embed is an order embedding sending natural lubs to joins, and the
/// closed sets are closed under intersection and joins, for every general
/// lubpo up to max_size.
SweepReport embedding_sweep(std::size_t max_size);

/// ccc_laws over every triple drawn from the canonical completions of the
/// one-point domain, C2, C3 and V, in each mode.
SweepReport ccc_sweep();

/// On every pair of directed fixtures: general naturals are pointwise
/// naturals, and S5 survives products and general exponents. Pairs whose
/// exponents exceed the size guards are counted as skipped.
SweepReport exponent_sweep();

/// Algebraicity implications over every dlubpo up to max_size, plus
/// `lemma_samples` random (D, A, a) for the generator lemma.
SweepReport algebraicity_sweep(std::size_t max_size, std::size_t lemma_samples,
                               std::uint64_t seed);

/// One-line form of serialize(d) for reports.
std::string inline_lubpo(const Lubpo& d);

}  // namespace lubkit
