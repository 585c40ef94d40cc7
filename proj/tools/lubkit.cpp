// Command-line front end: axiom checks, closures, completions, rule validity,
// certificates, constructions, the worked-example gallery and the harnesses.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lubkit/axioms.hpp"
#include "lubkit/category.hpp"
#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/format.hpp"
#include "lubkit/gallery.hpp"
#include "lubkit/harness.hpp"
#include "lubkit/rule_classes.hpp"
#include "lubkit/sweeps.hpp"

using namespace lubkit;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::string map_text(const Poset& src, const Poset& dst, const MonoMap& f) {
  std::string s;
  for (Elem x = 0; x < src.size(); ++x) {
    s += (x ? ", " : "") + src.label(x) + "->" + dst.label(f(x));
  }
  return s;
}

std::string sets_text(const Poset& p, const std::vector<ElemSet>& sets) {
  std::string s;
  for (ElemSet x : sets) s += (s.empty() ? "" : " ") + format_set(p, x);
  return s;
}

void print_witness(const Lubpo& d, const AxiomWitness& w) {
  const Poset& p = d.poset();
  if (!w.sets.empty()) std::cout << "  witness: " << sets_text(p, w.sets) << "\n";
  if (w.index) {
    const std::size_t n = w.index->size();
    std::cout << "  index poset on " << n << " elements, covers:";
    for (auto [lo, hi] : w.index->covers()) std::cout << " " << lo << "<" << hi;
    std::cout << "\n  family:";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::cout << " y" << i << j << "=" << p.label(w.family[i * n + j]);
      }
    }
    std::cout << "\n";
  }
}

int cmd_check(const std::string& file, const std::string& axiom,
              std::optional<std::size_t> bound) {
  const Lubpo d = read_lub_file(file).lubpo;
  std::vector<Axiom> which;
  if (axiom == "all") {
    for (Axiom a : kAllAxioms) {
      if (d.mode() == Mode::general || !general_only(a)) which.push_back(a);
    }
  } else if (auto a = parse_axiom(axiom)) {
    which.push_back(*a);
  } else {
    std::cerr << "unknown axiom '" << axiom << "'\n";
    return kUsage;
  }
  int rc = kOk;
  for (Axiom a : which) {
    const CheckReport r = check_axiom(d, a, bound);
    std::cout << to_string(a) << ": " << (r.holds ? "holds" : "fails")
              << (r.exact ? "" : " (bounded)") << "\n";
    if (!r.holds) {
      rc = kFails;
      print_witness(d, *r.witness);
    }
  }
  return rc;
}

int cmd_cl(const std::string& file, const std::string& set) {
  const Lubpo d = read_lub_file(file).lubpo;
  std::cout << format_set(d.poset(), cl(d, parse_set(d.poset(), set))) << "\n";
  return kOk;
}

RuleClass parse_class(const std::string& s) {
  return s == "sazonov" ? RuleClass::sazonov : RuleClass::canonical;
}

int cmd_complete(const std::string& file, const std::string& cls) {
  std::cout << serialize(class_completion(read_lub_file(file).lubpo, parse_class(cls)));
  return kOk;
}

std::vector<ElemSet> parse_pattern(const Poset& p, const std::string& text) {
  std::vector<ElemSet> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_set(p, part));
  }
  return out;
}

int cmd_valid(const std::string& file, const std::string& pattern, const std::string& result) {
  const Poset p = read_lub_file(file).lubpo.poset();
  const LubRule r = LubRule::make(p, parse_pattern(p, pattern), parse_set(p, result));
  if (is_valid_rule(r)) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid\n";
  const OracleVerdict v = validity_oracle(r);
  if (v.witness) {
    const Poset& t = v.witness->target;
    std::cout << "  target order on " << t.size() << " elements, covers:";
    for (auto [lo, hi] : t.covers()) std::cout << " " << t.label(lo) << "<" << t.label(hi);
    std::cout << "\n  map: " << map_text(p, t, v.witness->map) << "\n";
  }
  return kFails;
}

int cmd_derive(const std::string& file, const std::string& cls, const std::string& target,
               const std::string& out) {
  const Lubpo d = read_lub_file(file).lubpo;
  const Poset& p = d.poset();
  const auto arrow = target.find("->");
  if (arrow == std::string::npos) {
    std::cerr << "target must look like {x,y}->z\n";
    return kUsage;
  }
  const ElemSet set = parse_set(p, target.substr(0, arrow));
  const ElemSet lub_set = parse_set(p, target.substr(arrow + 2));
  if (lub_set.size() != 1) {
    std::cerr << "target must name one element after '->'\n";
    return kUsage;
  }
  const Elem lub_elem = *lub_set.begin();
  const RuleClass rc = parse_class(cls);
  const auto ded = derive_in_class(d, rc, set, lub_elem);
  if (!ded) {
    std::cout << "not derivable\n";
    return kFails;
  }
  const nlohmann::json j = certificate_json(class_rule_system(p, rc), *ded);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return kUsage;
    }
    os << j.dump(2) << "\n";
  }
  std::cout << "derived with " << ded->nodes.size() << " nodes\n";
  return kOk;
}

int cmd_lattice(const std::string& file) {
  const Lubpo d = read_lub_file(file).lubpo;
  const ClosedSetLattice lat = lub_completion(d);
  std::cout << lat.size() << " closed sets\n";
  for (ElemSet s : lat.sets()) std::cout << "  " << format_set(d.poset(), s) << "\n";
  std::cout << "embedding\n";
  for (Elem x = 0; x < d.size(); ++x) {
    std::cout << "  " << d.poset().label(x) << " -> "
              << format_set(d.poset(), in_embed(d, x)) << "\n";
  }
  return kOk;
}

int cmd_construct(const std::string& op, const std::string& a, const std::string& b,
                  const std::string& out) {
  const Lubpo d = read_lub_file(a).lubpo;
  const Lubpo e = read_lub_file(b).lubpo;
  std::string text;
  if (op == "product") {
    text = serialize(product(d, e).lubpo);
  } else {
    const FunctionSpace fs = op == "pexp" ? pointwise_exp(d, e) : general_exp(d, e);
    for (std::size_t k = 0; k < fs.carrier.size(); ++k) {
      text += "# f" + std::to_string(k) + ": " +
              map_text(d.poset(), e.poset(), fs.carrier[k]) + "\n";
    }
    text += serialize(fs.lubpo);
  }
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return kUsage;
    }
    os << text;
  }
  return kOk;
}

int cmd_gallery(const std::string& id, std::optional<std::size_t> bound, bool json) {
  const GalleryReport r = run_gallery(id, bound);
  if (json) {
    std::cout << gallery_json(r).dump(2) << "\n";
    return r.ok() ? kOk : kFails;
  }
  std::cout << r.id;
  if (r.bound) std::cout << " (bound " << r.bound << ")";
  std::cout << "\n";
  for (const GalleryCheck& c : r.checks) {
    std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  for (const std::string& e : r.errata) std::cout << "  erratum: " << e << "\n";
  for (const std::string& o : r.out_of_scope) std::cout << "  out of scope: " << o << "\n";
  return r.ok() ? kOk : kFails;
}

int print_sweep(const SweepReport& r) {
  std::cout << r.name << ": " << r.checked << " checked, " << r.failures.size()
            << " failures\n";
  for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
  return r.ok() ? kOk : kFails;
}

int cmd_harness(const std::string& kind, std::size_t max_size, std::size_t samples,
                std::uint64_t seed) {
  if (max_size == 0 || max_size > enumeration_cap()) {
    std::cerr << "max-size must be between 1 and " << enumeration_cap() << "\n";
    return kUsage;
  }
  if (kind == "equivalences") {
    HarnessOptions opt;
    opt.max_size = max_size;
    opt.samples = samples;
    opt.seed = seed;
    const HarnessReport r = equivalence_harness(opt);
    std::cout << "equivalences: " << r.exhaustive_instances << " exhaustive, "
              << r.sampled_instances << " sampled, " << r.discrepancies.size()
              << " discrepancies\n";
    for (const Discrepancy& d : r.discrepancies) {
      std::cout << "  " << d.relation << " on " << inline_lubpo(d.instance) << "\n";
    }
    return r.discrepancies.empty() ? kOk : kFails;
  }
  if (kind == "validity-agreement") return print_sweep(validity_agreement_sweep(max_size));
  return print_sweep(realization_sweep(max_size, samples, seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lubkit: posets with natural lubs"};
  app.require_subcommand(1);

  std::string file, axiom, set, cls, pattern, result, target, proof, op, out, id, kind;
  std::vector<std::string> operands;
  std::optional<std::size_t> bound;
  std::size_t max_size = 4, samples = 0;
  std::uint64_t seed = 1;
  bool json = false;
  const std::vector<std::string> classes{"sazonov", "canonical"};

  auto* check = app.add_subcommand("check", "check an axiom");
  check->add_option("file", file)->required();
  check->add_option("--axiom", axiom)->required();
  check->add_option("--bound", bound, "index-poset bound for S4_2 and S10");

  auto* clc = app.add_subcommand("cl", "closure of a set");
  clc->add_option("file", file)->required();
  clc->add_option("--set", set)->required();

  auto* complete = app.add_subcommand("complete", "class completion");
  complete->add_option("file", file)->required();
  complete->add_option("--class", cls)->required()->check(CLI::IsMember(classes));

  auto* valid = app.add_subcommand("valid", "validity of a lub-rule");
  valid->add_option("file", file)->required();
  valid->add_option("--pattern", pattern, "sets separated by ';'")->required();
  valid->add_option("--result", result)->required();

  auto* derive = app.add_subcommand("derive", "derive a natural and emit a certificate");
  derive->add_option("file", file)->required();
  derive->add_option("--class", cls)->required()->check(CLI::IsMember(classes));
  derive->add_option("--target", target, "{x,y}->z")->required();
  derive->add_option("--emit-proof", proof);

  auto* lattice = app.add_subcommand("lattice", "lub-completion");
  lattice->add_option("file", file)->required();

  auto* construct = app.add_subcommand("construct", "product or exponent of two files");
  construct->add_option("--op", op)->required()->check(
      CLI::IsMember({"product", "pexp", "gexp"}));
  construct->add_option("operands", operands)->required()->expected(2);
  construct->add_option("-o", out);

  auto* gallery = app.add_subcommand("gallery", "worked examples");
  gallery->add_option("id", id)->required()->check(CLI::IsMember({"g1", "g2", "g3", "g4"}));
  gallery->add_option("--bound", bound);
  gallery->add_flag("--json", json);

  auto* harness = app.add_subcommand("harness", "exhaustive and sampled sweeps");
  harness->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"equivalences", "validity-agreement", "realization"}));
  harness->add_option("--max-size", max_size)->required();
  harness->add_option("--samples", samples);
  harness->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, axiom, bound);
    if (*clc) return cmd_cl(file, set);
    if (*complete) return cmd_complete(file, cls);
    if (*valid) return cmd_valid(file, pattern, result);
    if (*derive) return cmd_derive(file, cls, target, proof);
    if (*lattice) return cmd_lattice(file);
    if (*construct) return cmd_construct(op, operands[0], operands[1], out);
    if (*gallery) return cmd_gallery(id, bound, json);
    if (*harness) return cmd_harness(kind, max_size, samples, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
