#pragma once

// Shared by the rule classes and the axiom checkers.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "lubkit/dense_set.hpp"
#include "lubkit/order.hpp"

namespace lubkit::detail {

// Unions of nonempty subcollections of `gens`.
inline std::vector<ElemSet> union_closure(std::span<const ElemSet> gens, std::size_t universe) {
  DenseSet seen(universe);
  std::vector<ElemSet> out;
  for (ElemSet g : gens) {
    if (!seen.contains(g.bits())) {
      seen.insert(g.bits());
      out.push_back(g);
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (ElemSet g : gens) {
      ElemSet u = out[k] | g;
      if (!seen.contains(u.bits())) {
        seen.insert(u.bits());
        out.push_back(u);
      }
    }
  }
  return out;
}

// Every ∪X̄ obtainable by S7 from the natural Z: choose, for each z ∈ Z, a
// union of naturals with lub z. Calls emit(union, choice) with choice[k]
// the union picked for the k-th member of Z.
template <class Emit>
void s7_unions(const std::vector<std::vector<ElemSet>>& by_lub, std::size_t universe,
               ElemSet z, Emit&& emit) {
  std::vector<Elem> members(z.begin(), z.end());
  std::vector<std::vector<ElemSet>> options;
  for (Elem m : members) {
    options.push_back(union_closure(by_lub[m], universe));
    if (options.back().empty()) return;
  }
  // parent[k][mask]: the union chosen at step k leading to mask.
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> parent;
  std::vector<std::uint64_t> frontier{0};
  for (std::size_t k = 0; k < members.size(); ++k) {
    DenseSet seen(universe);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> back(universe);
    std::vector<std::uint64_t> next;
    for (std::uint64_t c : frontier) {
      for (ElemSet u : options[k]) {
        std::uint64_t m = c | u.bits();
        if (seen.contains(m)) continue;
        seen.insert(m);
        back[m] = {c, u.bits()};
        next.push_back(m);
      }
    }
    parent.push_back(std::move(back));
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  for (std::uint64_t m : frontier) {
    std::vector<ElemSet> choice(members.size());
    std::uint64_t cur = m;
    for (std::size_t k = members.size(); k-- > 0;) {
      choice[k] = ElemSet(parent[k][cur].second);
      cur = parent[k][cur].first;
    }
    emit(ElemSet(m), choice);
  }
}

}  // namespace lubkit::detail
