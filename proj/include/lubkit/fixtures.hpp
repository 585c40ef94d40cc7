#pragma once

#include "lubkit/lubpo.hpp"

namespace lubkit::fixtures {

/// a > b, c; b > d, e; c > e.
Poset p7_order();
/// P7 with naturals {b,c} -> a and {d,e} -> b.
Lubpo p7();

/// x0 < x1 < ... ; with `all_directed`, every directed set is natural.
Lubpo chain(std::size_t n, Mode mode = Mode::directed, bool all_directed = false);
/// bot < l, bot < r.
Lubpo vee(Mode mode = Mode::directed, bool all_directed = false);
/// bot < l, r < top.
Lubpo diamond(Mode mode = Mode::directed, bool all_directed = false);
/// One point.
Lubpo terminal(Mode mode = Mode::directed);

}  // namespace lubkit::fixtures
