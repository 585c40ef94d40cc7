#include "lubkit/format.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "lubkit/errors.hpp"

namespace lubkit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Splits at top-level commas (not inside parentheses).
std::vector<Token> split_commas(std::string_view s, std::size_t column) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::string_view part = s.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < part.size() && is_space(part[lead])) ++lead;
      std::size_t end = part.size();
      while (end > lead && is_space(part[end - 1])) --end;
      out.push_back({part.substr(lead, end - lead), column + start + lead});
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

Elem lookup(const Poset& p, Token t, std::size_t line) {
  if (t.text.empty()) throw ParseError(line, t.column, "missing element name");
  auto e = p.find(t.text);
  if (!e) throw ParseError(line, t.column, "unknown element '" + std::string(t.text) + "'");
  return *e;
}

ElemSet parse_set_at(const Poset& p, std::string_view text, std::size_t line,
                     std::size_t column) {
  std::size_t lead = 0;
  while (lead < text.size() && is_space(text[lead])) ++lead;
  std::size_t end = text.size();
  while (end > lead && is_space(text[end - 1])) --end;
  std::string_view body = text.substr(lead, end - lead);
  column += lead;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError(line, column + body.size(), "expected '}'");
    body = body.substr(1, body.size() - 2);
    ++column;
  }
  ElemSet out;
  std::size_t nonspace = 0;
  for (char ch : body) nonspace += !is_space(ch);
  if (nonspace == 0) return out;
  for (Token t : split_commas(body, column)) out.insert(lookup(p, t, line));
  return out;
}

}  // namespace

bool is_serializable_label(std::string_view label) {
  if (label.empty()) return false;
  int depth = 0;
  for (char c : label) {
    if (is_space(c) || c == '\n' || c == '{' || c == '}' || c == '#' || c == '<') return false;
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) return false;
    if (c == ',' && depth == 0) return false;
  }
  return depth == 0 && label.find("->") == std::string_view::npos;
}

ElemSet parse_set(const Poset& p, std::string_view text) {
  return parse_set_at(p, text, 1, 1);
}

Rpo LubFile::as_rpo() const {
  return make_rpo(lubpo.poset(), proper.value_or(ElemSet{}));
}

LubFile parse_lub(std::string_view text) {
  std::vector<std::string> labels;
  std::optional<std::size_t> elements_line;
  std::vector<std::pair<std::size_t, std::string_view>> order_lines, natural_lines,
      proper_lines;
  Mode mode = Mode::general;
  std::set<std::string_view> seen_keys;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    std::string_view key = words[0].text;
    std::size_t rest_col = words[0].column + key.size();
    if (key == "elements") {
      if (elements_line) throw ParseError(line_no, 1, "duplicate elements line");
      if (words.size() == 1) throw ParseError(line_no, rest_col, "no elements listed");
      elements_line = line_no;
      std::set<std::string_view> names;
      for (std::size_t k = 1; k < words.size(); ++k) {
        if (!is_serializable_label(words[k].text)) {
          throw ParseError(line_no, words[k].column, "bad element name");
        }
        if (!names.insert(words[k].text).second) {
          throw ParseError(line_no, words[k].column,
                           "duplicate element '" + std::string(words[k].text) + "'");
        }
        labels.emplace_back(words[k].text);
      }
    } else if (key == "order") {
      order_lines.emplace_back(line_no, line);
    } else if (key == "mode") {
      if (!seen_keys.insert(key).second) throw ParseError(line_no, 1, "duplicate mode line");
      if (words.size() != 2 || (words[1].text != "general" && words[1].text != "directed")) {
        throw ParseError(line_no, rest_col, "expected 'general' or 'directed'");
      }
      mode = words[1].text == "general" ? Mode::general : Mode::directed;
    } else if (key == "natural") {
      natural_lines.emplace_back(line_no, line);
    } else if (key == "proper") {
      if (!proper_lines.empty()) throw ParseError(line_no, 1, "duplicate proper line");
      proper_lines.emplace_back(line_no, line);
    } else {
      throw ParseError(line_no, words[0].column, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!elements_line) throw ParseError(1, 1, "missing elements line");

  const std::size_t n = labels.size();
  if (n > kMaxElements) throw BoundExceeded("more than 64 elements");
  Poset names = Poset::antichain(n, labels);
  std::vector<std::pair<Elem, Elem>> rel;
  for (auto [ln, line] : order_lines) {
    auto words = split_words(line);
    for (std::size_t k = 1; k < words.size(); ++k) {
      Token t = words[k];
      int depth = 0;
      std::size_t lt = std::string_view::npos;
      for (std::size_t i = 0; i < t.text.size(); ++i) {
        if (t.text[i] == '(') ++depth;
        if (t.text[i] == ')') --depth;
        if (t.text[i] == '<' && depth == 0) {
          lt = i;
          break;
        }
      }
      if (lt == std::string_view::npos) throw ParseError(ln, t.column, "expected x<y");
      Elem lo = lookup(names, {t.text.substr(0, lt), t.column}, ln);
      Elem hi = lookup(names, {t.text.substr(lt + 1), t.column + lt + 1}, ln);
      rel.emplace_back(lo, hi);
    }
  }
  Poset order = Poset::from_relation(n, rel, labels);

  std::vector<Natural> naturals;
  for (auto [ln, line] : natural_lines) {
    std::size_t start = line.find("natural") + 7;
    std::size_t open = line.find('{', start);
    std::size_t close = line.find('}', start);
    if (open == std::string_view::npos) throw ParseError(ln, start + 1, "expected '{'");
    if (close == std::string_view::npos || close < open) {
      throw ParseError(ln, line.size() + 1, "expected '}'");
    }
    for (std::size_t i = start; i < open; ++i) {
      if (!is_space(line[i])) throw ParseError(ln, i + 1, "expected '{'");
    }
    ElemSet s = parse_set_at(order, line.substr(open, close - open + 1), ln, open + 1);
    std::size_t arrow = close + 1;
    while (arrow < line.size() && is_space(line[arrow])) ++arrow;
    if (line.substr(arrow, 2) != "->") throw ParseError(ln, arrow + 1, "expected '->'");
    auto tail = split_words(line.substr(arrow + 2));
    if (tail.size() != 1) {
      throw ParseError(ln, arrow + 3, "expected exactly one lub after '->'");
    }
    Elem z = lookup(order, {tail[0].text, arrow + 2 + tail[0].column}, ln);
    naturals.push_back({s, z});
  }

  LubFile out{Lubpo::make(order, naturals, mode), std::nullopt};
  for (auto [ln, line] : proper_lines) {
    ElemSet pr;
    auto words = split_words(line);
    for (std::size_t k = 1; k < words.size(); ++k) pr.insert(lookup(order, words[k], ln));
    out.proper = pr;
  }
  return out;
}

LubFile read_lub_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lub(ss.str());
}

std::string serialize(const LubFile& f) {
  const Lubpo& d = f.lubpo;
  const Poset& p = d.poset();
  for (const std::string& l : p.labels()) {
    if (!is_serializable_label(l)) throw Error("label '" + l + "' cannot be written");
  }
  std::ostringstream out;
  out << "elements";
  for (const std::string& l : p.labels()) out << ' ' << l;
  out << '\n';
  auto covers = p.covers();
  if (!covers.empty()) {
    out << "order";
    for (auto [lo, hi] : covers) out << ' ' << p.label(lo) << '<' << p.label(hi);
    out << '\n';
  }
  out << "mode " << to_string(d.mode()) << '\n';
  for (const Natural& n : d.naturals()) {
    if (n.set.size() == 1) continue;
    out << "natural " << format_set(p, n.set) << " -> " << p.label(n.lub) << '\n';
  }
  if (f.proper) {
    out << "proper";
    for (Elem x : *f.proper) out << ' ' << p.label(x);
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Lubpo& d) { return serialize(LubFile{d, std::nullopt}); }

nlohmann::json certificate_json(const RuleSystem& r, const Deduction& d) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const DeductionNode& n = d.nodes[i];
    nodes.push_back({{"id", i},
                     {"item", n.label},
                     {"label", r.label ? r.label(n.label) : std::to_string(n.label)},
                     {"rule", n.rule},
                     {"premises", n.premises},
                     {"detail", n.detail}});
  }
  return {{"root", d.root}, {"nodes", nodes}};
}

Deduction certificate_from_json(const nlohmann::json& j) {
  try {
    Deduction d;
    d.root = j.at("root").get<std::size_t>();
    const auto& nodes = j.at("nodes");
    d.nodes.resize(nodes.size());
    for (const auto& n : nodes) {
      std::size_t id = n.at("id").get<std::size_t>();
      if (id >= d.nodes.size()) throw ParseError(1, 1, "node id out of range");
      DeductionNode& out = d.nodes[id];
      out.label = n.at("item").get<Item>();
      out.rule = n.at("rule").get<std::string>();
      out.premises = n.at("premises").get<std::vector<std::size_t>>();
      out.detail = n.value("detail", "");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("bad certificate: ") + e.what());
  }
}

nlohmann::json harness_json(const HarnessReport& r) {
  nlohmann::json disc = nlohmann::json::array();
  for (const Discrepancy& d : r.discrepancies) {
    nlohmann::json values = nlohmann::json::object();
    for (auto [a, v] : d.values) values[to_string(a)] = v;
    disc.push_back({{"relation", d.relation},
                    {"instance", serialize(d.instance)},
                    {"values", values}});
  }
  return {{"exhaustive_instances", r.exhaustive_instances},
          {"sampled_instances", r.sampled_instances},
          {"checks", r.checks},
          {"discrepancies", disc}};
}

}  // namespace lubkit
