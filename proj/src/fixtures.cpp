#include "lubkit/fixtures.hpp"

namespace lubkit::fixtures {

namespace {

Lubpo finish(Poset p, Mode mode, bool all_directed) {
  if (all_directed) {
    Lubpo d = all_directed_natural(p);
    return mode == Mode::directed ? d : Lubpo::trusted(p, d.sets(), Mode::general);
  }
  return Lubpo::trusted(std::move(p), {}, mode);
}

}  // namespace

Poset p7_order() {
  return Poset::from_relation(5, {{3, 1}, {4, 1}, {4, 2}, {1, 0}, {2, 0}},
                              {"a", "b", "c", "d", "e"});
}

Lubpo p7() {
  return Lubpo::from_sets(p7_order(), std::vector<ElemSet>{{1, 2}, {3, 4}});
}

Lubpo chain(std::size_t n, Mode mode, bool all_directed) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return finish(Poset::chain(n, std::move(labels)), mode, all_directed);
}

Lubpo vee(Mode mode, bool all_directed) {
  return finish(Poset::from_relation(3, {{0, 1}, {0, 2}}, {"bot", "l", "r"}), mode,
                all_directed);
}

Lubpo diamond(Mode mode, bool all_directed) {
  return finish(Poset::from_relation(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                     {"bot", "l", "r", "top"}),
                mode, all_directed);
}

Lubpo terminal(Mode mode) { return finish(Poset::chain(1, {"pt"}), mode, false); }

}  // namespace lubkit::fixtures
