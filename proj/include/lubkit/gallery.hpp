#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lubkit {

struct GalleryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GalleryReport {
  std::string id;
  std::size_t bound = 0;  // 0 when the example is finite
  std::vector<GalleryCheck> checks;
  /// Places where the worked example as published does not hold up.
  std::vector<std::string> errata;
  std::vector<std::string> out_of_scope;
  nlohmann::json certificate;

  bool ok() const;
};

inline constexpr std::string_view kGalleryIds[] = {"g1", "g2", "g3", "g4"};

/// Default bound of a gallery entry (0 for g1).
std::size_t default_gallery_bound(std::string_view id);

/// g1: the finite five-element example and its extra natural lub.
/// g2: the curry counterexample D, E, C checked for indices up to the bound.
/// g3: the three-step derivation in the infinite example E.
/// g4: the level-by-level closure computation under each b_n.
/// Throws Error for an unknown id, BoundExceeded for a zero or oversized
/// bound.
GalleryReport run_gallery(std::string_view id, std::optional<std::size_t> bound = {});

nlohmann::json gallery_json(const GalleryReport& r);

/// Replays a g2 certificate: recomputes each eval value from the curried
/// table, rejects any b', and checks that the pairs form a directed set
/// below the bound whose second components reach every b_i.
bool verify_g2_certificate(const nlohmann::json& cert);

}  // namespace lubkit
