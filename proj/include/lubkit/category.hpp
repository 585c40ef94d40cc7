#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lubkit/lubpo.hpp"

namespace lubkit {

/// D × E. The pair (i, j) has index i * |E| + j and label "(x,y)".
struct ProductSpace {
  Lubpo left;
  Lubpo right;
  Lubpo lubpo;
  MonoMap proj1;
  MonoMap proj2;

  Elem pair(Elem i, Elem j) const { return i * right.size() + j; }
};

/// Throws ModeMismatch if the modes differ and BoundExceeded if the pair
/// carrier has more than 64 elements or a natural pair is too large to
/// enumerate.
ProductSpace product(const Lubpo& d, const Lubpo& e);

/// ⟨f, g⟩ : C → D × E.
MonoMap pairing(const ProductSpace& p, const MonoMap& f, const MonoMap& g);

/// f × g : A × B → C × D.
MonoMap product_map(const ProductSpace& src, const ProductSpace& dst, const MonoMap& f,
                    const MonoMap& g);

enum class ExpFlavor { pointwise, general };
const char* to_string(ExpFlavor f);

/// Continuous maps D → E under the pointwise order, labelled "f0", "f1", ...
struct FunctionSpace {
  Lubpo domain;
  Lubpo codomain;
  std::vector<MonoMap> carrier;  // lexicographic table order
  Lubpo lubpo;
  ExpFlavor flavor = ExpFlavor::pointwise;

  std::optional<Elem> index_of(const MonoMap& f) const;
};

/// Default cap on |D| * |E| for exponents.
inline constexpr std::size_t kExpProductBound = 24;

/// F is natural iff (Fx, fx) is natural in E for every x. In directed mode F
/// must also be directed. Throws BoundExceeded past the size guards.
FunctionSpace pointwise_exp(const Lubpo& d, const Lubpo& e,
                            std::size_t product_bound = kExpProductBound);

/// F is natural iff eval(A) is natural with lub f(lub π₂A) for every
/// directed A ⊆ F × |D| with π₁A = F and π₂A natural. Directed mode only
/// (ModeMismatch otherwise).
FunctionSpace general_exp(const Lubpo& d, const Lubpo& e,
                          std::size_t product_bound = kExpProductBound);

/// f(x) for the carrier element f. Throws NotInCarrier.
Elem eval_apply(const FunctionSpace& fs, Elem f, Elem x);

/// eval : (D ⇒ E) × D → E over the given product of fs.lubpo and fs.domain.
MonoMap eval_map(const FunctionSpace& fs, const ProductSpace& p);

/// Continuity of eval, decided without materializing the product.
bool eval_continuous(const FunctionSpace& fs);

struct CurryResult {
  MonoMap map;  // C → fs carrier
  bool continuous = false;
};

/// c ↦ λx. f(c, x). `p` is C × D and fs is D ⇒ E. Throws NotInCarrier if
/// some λx. f(c, x) is not a continuous map.
CurryResult curry_fn(const ProductSpace& p, const FunctionSpace& fs, const MonoMap& f);

/// Ī: I itself if it has a greatest element, else I with a new top "t".
/// The naturals are the singletons and (I, top). Throws NotDirectedPoset.
Lubpo bar_index(const Poset& i);

struct LawCheck {
  std::string name;
  bool holds = true;
  std::string detail;  // first failure
};

struct CccReport {
  std::vector<LawCheck> laws;
  bool eval_continuous = true;
  /// Bounded S10 on the exponent's codomain. Laws are meant as assertions
  /// only when this holds.
  bool codomain_s10 = true;

  bool all_hold() const;
};

/// Exhaustive check of the terminal, product and pointwise exponent laws for
/// C, D, E (each at most 3 elements, BoundExceeded otherwise).
CccReport ccc_laws(const Lubpo& c, const Lubpo& d, const Lubpo& e);

/// A discontinuous curry into the general exponent.
struct CurryFinding {
  Lubpo c, d, e;
  MonoMap f;  // on C × D
};

struct CurrySearchReport {
  std::size_t triples = 0;
  std::size_t maps = 0;
  bool exhausted = true;  // false if the map budget ran out
  std::vector<CurryFinding> findings;
};

/// Tries every triple of directed-mode lubpos on at most `max_size`
/// elements (orders up to isomorphism, every family of directed naturals)
/// and every continuous f : C × D → E, recording curries into the general
/// exponent that are not continuous.
CurrySearchReport curry_counterexample_search(std::size_t max_size,
                                              std::size_t map_budget = 1000000);

}  // namespace lubkit
