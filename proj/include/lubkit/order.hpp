#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lubkit {

/// Index of an element of a finite carrier.
using Elem = std::size_t;

/// Hard limit on carrier size; subsets are 64-bit masks.
inline constexpr std::size_t kMaxElements = 64;

/// Finite subset of a carrier {0, ..., n-1}.
///
/// Stored as a bit mask, so the representation is canonical and equality is
/// extensional. Sets are totally ordered by their mask value; every
/// enumeration in the library uses this order.
class ElemSet {
 public:
  class iterator {
   public:
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    using pointer = void;
    using reference = Elem;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Elem operator*() const {
      return static_cast<Elem>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<Elem> elems) {
    for (Elem e : elems) insert(e);
  }

  static constexpr ElemSet single(Elem e) { return ElemSet(bit(e)); }
  /// {0, ..., n-1}.
  static constexpr ElemSet range(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem e) const { return e < 64 && (bits_ & bit(e)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; the set must be nonempty.
  constexpr Elem first() const {
    return static_cast<Elem>(std::countr_zero(bits_));
  }
  /// Largest member; the set must be nonempty.
  constexpr Elem last() const {
    return static_cast<Elem>(63 - std::countl_zero(bits_));
  }

  constexpr void insert(Elem e) { bits_ |= bit(e); }
  constexpr void erase(Elem e) { bits_ &= ~bit(e); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ | b.bits_);
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & ~b.bits_);
  }
  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const ElemSet&) const = default;

 private:
  static constexpr std::uint64_t bit(Elem e) { return std::uint64_t{1} << e; }
  std::uint64_t bits_ = 0;
};

/// Calls `f` on every subset of `universe`, in increasing mask order.
template <class F>
void for_each_subset(ElemSet universe, F&& f) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  do {
    f(ElemSet(s));
    s = (s - u) & u;
  } while (s != 0);
}

/// Finite partial order on {0, ..., size-1}.
///
/// The stored relation is always the reflexive-transitive closure of the
/// input; construction fails with CycleError when that closure is not
/// antisymmetric.
class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (each pair is lo <= hi).
  /// Labels default to "0", "1", ...
  static Poset from_relation(std::size_t size,
                             std::span<const std::pair<Elem, Elem>> pairs,
                             std::vector<std::string> labels = {});
  static Poset from_relation(std::size_t size,
                             std::initializer_list<std::pair<Elem, Elem>> pairs,
                             std::vector<std::string> labels = {}) {
    std::vector<std::pair<Elem, Elem>> v(pairs);
    return from_relation(size, v, std::move(labels));
  }

  /// Discrete order.
  static Poset antichain(std::size_t size, std::vector<std::string> labels = {});
  /// 0 < 1 < ... < size-1.
  static Poset chain(std::size_t size, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  ElemSet all() const { return ElemSet::range(size()); }

  bool leq(Elem x, Elem y) const { return up_[x].contains(y); }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  /// {y | x <= y}.
  ElemSet up(Elem x) const { return up_[x]; }
  /// {y | y <= x}.
  ElemSet down(Elem x) const { return down_[x]; }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Same carrier size and relation; labels are ignored.
  bool same_order(const Poset& other) const { return up_ == other.up_; }
  bool operator==(const Poset& other) const = default;

  /// Copy with new labels.
  Poset relabeled(std::vector<std::string> labels) const;

 private:
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<std::string> labels_;
};

/// Renders a set as "{a,b}" using the poset's labels.
std::string format_set(const Poset& p, ElemSet s);

ElemSet upper_bounds(const Poset& p, ElemSet a);
ElemSet lower_bounds(const Poset& p, ElemSet a);
/// Least upper bound; lub of the empty set is the least element if any.
std::optional<Elem> lub(const Poset& p, ElemSet a);
std::optional<Elem> least(const Poset& p);
std::optional<Elem> greatest(const Poset& p);
/// Nonempty and every pair has an upper bound inside the set.
bool is_directed(const Poset& p, ElemSet a);
ElemSet down_closure(const Poset& p, ElemSet a);
ElemSet up_closure(const Poset& p, ElemSet a);
/// A ⊑ B: every member of A lies below some member of B.
bool cofinal_leq(const Poset& p, ElemSet a, ElemSet b);
/// A ⊑ b: every member of A lies below b.
bool cofinal_leq(const Poset& p, ElemSet a, Elem b);
/// Maximal members of a set.
ElemSet maximal(const Poset& p, ElemSet a);

/// Order-preserving map between two posets, stored as a table.
class MonoMap {
 public:
  /// Validates monotonicity; throws NotMonotone or IndexError.
  static MonoMap make(const Poset& source, const Poset& target,
                      std::vector<Elem> table);
  /// No validation; the caller guarantees the table is monotone.
  static MonoMap trusted(std::size_t target_size, std::vector<Elem> table) {
    return MonoMap(target_size, std::move(table));
  }
  static MonoMap identity(const Poset& p);
  static MonoMap constant(const Poset& source, const Poset& target, Elem value);

  std::size_t source_size() const { return table_.size(); }
  std::size_t target_size() const { return target_size_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }
  ElemSet image(ElemSet a) const;

  /// this ∘ inner.
  MonoMap after(const MonoMap& inner) const;

  bool operator==(const MonoMap&) const = default;
  auto operator<=>(const MonoMap&) const = default;

 private:
  MonoMap(std::size_t target_size, std::vector<Elem> table)
      : target_size_(target_size), table_(std::move(table)) {}
  std::size_t target_size_ = 0;
  std::vector<Elem> table_;
};

bool is_monotone(const Poset& source, const Poset& target,
                 std::span<const Elem> table);

/// Visits every monotone map source -> target in lexicographic table order.
/// The visitor returns false to stop early.
void for_each_monotone_map(const Poset& source, const Poset& target,
                           const std::function<bool(std::span<const Elem>)>& visit);

/// All monotone maps, lexicographic table order.
std::vector<MonoMap> enumerate_monotone_maps(const Poset& source,
                                             const Poset& target);

/// Size cap for enumerations: LUBKIT_MAX_SIZE if set, else `fallback`.
std::size_t enumeration_cap(std::size_t fallback = 6);

/// All posets on n elements. Labeled enumeration lists every relation on
/// {0..n-1}; up_to_iso lists one canonical representative per isomorphism
/// class. Output is sorted by canonical code. Throws BoundExceeded when n
/// exceeds the cap (default 6, or LUBKIT_MAX_SIZE).
std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso,
                                    std::optional<std::size_t> bound = {});

/// Isomorphism-invariant code of a poset with at most 8 elements.
std::uint64_t canonical_code(const Poset& p);
/// The representative of p's isomorphism class whose relation bits equal
/// canonical_code(p).
Poset canonical_form(const Poset& p);

}  // namespace lubkit
