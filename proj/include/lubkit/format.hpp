#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lubkit/closure.hpp"
#include "lubkit/harness.hpp"
#include "lubkit/lubpo.hpp"
#include "lubkit/realization.hpp"

namespace lubkit {

/// Contents of a .lub file. Line grammar, '#' starts a comment:
///
///     elements a b c
///     order a<b b<c
///     mode general|directed
///     natural {a,b} -> c
///     proper a c
///
/// `elements` is required; the others are optional and `natural` repeats.
/// `proper` makes the file an rpo description.
struct LubFile {
  Lubpo lubpo;
  std::optional<ElemSet> proper;

  Rpo as_rpo() const;
};

/// Throws ParseError for syntax and name errors; semantic errors (wrong lub,
/// undirected natural in directed mode, ...) come from Lubpo::make.
LubFile parse_lub(std::string_view text);
LubFile read_lub_file(const std::string& path);

std::string serialize(const Lubpo& d);
std::string serialize(const LubFile& f);

/// "{a,b}" or "a,b" over p's labels. Commas inside parentheses belong to
/// the label. Throws ParseError (line 1, column within `text`).
ElemSet parse_set(const Poset& p, std::string_view text);

/// Labels that survive a round trip through the file grammar.
bool is_serializable_label(std::string_view label);

/// Certificate as {"root": id, "nodes": [{id, item, label, rule, premises,
/// detail}]}; leaves have an empty rule.
nlohmann::json certificate_json(const RuleSystem& r, const Deduction& d);
/// Inverse of certificate_json (labels are not trusted). Throws ParseError.
Deduction certificate_from_json(const nlohmann::json& j);

nlohmann::json harness_json(const HarnessReport& r);

}  // namespace lubkit
