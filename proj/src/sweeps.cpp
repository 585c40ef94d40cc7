#include "lubkit/sweeps.hpp"

#include <algorithm>
#include <optional>

#include "lubkit/algebraicity.hpp"
#include "lubkit/axioms.hpp"
#include "lubkit/category.hpp"
#include "lubkit/closure.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/format.hpp"
#include "lubkit/realization.hpp"
#include "lubkit/rule_classes.hpp"

namespace lubkit {

namespace {

std::vector<ElemSet> pick(const std::vector<ElemSet>& cands, std::uint64_t mask) {
  std::vector<ElemSet> out;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (mask >> k & 1) out.push_back(cands[k]);
  }
  return out;
}

std::string rule_text(const LubRule& r) {
  std::string s;
  for (ElemSet x : r.pattern) s += (s.empty() ? "" : ";") + format_set(r.host, x);
  return "pattern " + (s.empty() ? std::string("(none)") : s) + " result " +
         format_set(r.host, r.result);
}

Poset induced(const Poset& p, ElemSet keep) {
  std::vector<Elem> ids(keep.begin(), keep.end());
  std::vector<std::pair<Elem, Elem>> rel;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i != j && p.leq(ids[i], ids[j])) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relation(ids.size(), rel);
}

Poset random_dag_order(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Elem, Elem>> rel;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (coin(rng)) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relation(n, rel);
}

std::vector<Lubpo> distinct(std::vector<Lubpo> in) {
  std::vector<Lubpo> out;
  for (Lubpo& l : in) {
    if (std::none_of(out.begin(), out.end(), [&](const Lubpo& o) { return o == l; })) {
      out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace

std::string inline_lubpo(const Lubpo& d) {
  std::string s = serialize(d);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::vector<Lubpo> small_lubpos(std::size_t max_size, Mode mode) {
  std::vector<Lubpo> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const Poset& p : enumerate_posets(n, true)) {
      std::vector<ElemSet> extra;
      for (ElemSet s : mode == Mode::directed ? directed_subsets(p) : subsets_with_lub(p)) {
        if (s.size() != 1) extra.push_back(s);
      }
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << extra.size()); ++m) {
        out.push_back(Lubpo::trusted(p, pick(extra, m), mode));
      }
    }
  }
  return out;
}

Lubpo random_lubpo(std::mt19937_64& rng, std::size_t n, Mode mode) {
  const auto posets = enumerate_posets(n, true);
  const Poset& q = posets[rng() % posets.size()];
  std::vector<ElemSet> fam;
  for (ElemSet s : mode == Mode::directed ? directed_subsets(q) : subsets_with_lub(q)) {
    if (rng() % 4 == 0) fam.push_back(s);
  }
  return Lubpo::trusted(q, fam, mode);
}

SweepReport validity_agreement_sweep(std::size_t max_size) {
  SweepReport rep{"validity agreement"};
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const Poset& q : enumerate_posets(n, false)) {
      const auto cands = subsets_with_lub(q);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << cands.size()); ++m) {
        const auto pat = pick(cands, m);
        for (ElemSet res : cands) {
          const LubRule r = LubRule::make(q, pat, res);
          const OracleVerdict v = validity_oracle(r, 2);
          ++rep.checked;
          if (is_valid_rule(r) != v.valid) {
            rep.failures.push_back("paths disagree on " + rule_text(r));
          } else if (!v.valid && !verify_counterexample(r, *v.witness)) {
            rep.failures.push_back("counterexample does not replay for " + rule_text(r));
          }
        }
      }
    }
  }
  return rep;
}

SweepReport realization_sweep(std::size_t max_size, std::size_t samples, std::uint64_t seed) {
  SweepReport rep{"realization"};
  for (const Lubpo& d : small_lubpos(max_size, Mode::directed)) {
    auto [rd, in] = canonical_realization(d);
    ++rep.checked;
    const bool cd = is_cdlubpo(d);
    if (realizes(rd.rpo, d, in) != cd) {
      rep.failures.push_back(std::string(cd ? "cdlubpo not realized: " : "realized non-cdlubpo: ") +
                             inline_lubpo(d));
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t n = 2 + rng() % 5;
    const Poset r = random_dag_order(rng, n, 0.4);
    ElemSet proper(rng() & ((std::uint64_t{1} << n) - 1));
    if (proper.empty()) proper.insert(0);
    const Poset dp = induced(r, proper);
    const MonoMap phi = MonoMap::trusted(n, std::vector<Elem>(proper.begin(), proper.end()));
    // Alternate between every respected lub and a random part of them.
    std::bernoulli_distribution keep(k % 2 ? 1.0 : 0.7);
    std::vector<ElemSet> sets;
    for (ElemSet a : directed_subsets(dp)) {
      if (lub(r, phi.image(a)) == phi(*lub(dp, a)) && keep(rng)) sets.push_back(a);
    }
    const Lubpo d = Lubpo::trusted(dp, sets, Mode::directed);
    if (!realizes(make_rpo(r, proper), d, phi)) continue;
    ++rep.checked;
    if (!is_cdlubpo(d)) rep.failures.push_back("realized non-cdlubpo: " + inline_lubpo(d));
  }
  return rep;
}

SweepReport derived_rule_sweep(std::size_t samples, std::size_t max_size, std::uint64_t seed) {
  SweepReport rep{"derived rules"};
  std::mt19937_64 rng(seed);
  while (rep.checked < samples) {
    const Lubpo l = random_lubpo(rng, 1 + rng() % max_size, Mode::general);
    const Lubpo s = class_completion(l, RuleClass::sazonov);
    const Natural& n = s.naturals()[rng() % s.naturals().size()];
    const RuleSystem rs = class_rule_system(l.poset(), RuleClass::sazonov);
    DenseSet start(std::size_t{1} << l.size());
    for (const Natural& x : l.naturals()) start.insert(x.set.bits());
    ++rep.checked;
    auto cert = derive_in_class(l, RuleClass::sazonov, n.set, n.lub);
    const std::string where = format_set(l.poset(), n.set) + " in " + inline_lubpo(l);
    if (!cert) {
      rep.failures.push_back("no certificate for " + where);
    } else if (!verify_deduction(rs, start, *cert)) {
      rep.failures.push_back("certificate rejected for " + where);
    } else if (!is_valid_rule(flatten_certificate(l.poset(), *cert))) {
      rep.failures.push_back("flattened rule invalid for " + where);
    }
  }
  return rep;
}

SweepReport embedding_sweep(std::size_t max_size) {
  SweepReport rep{"embedding"};
  for (const Lubpo& d : small_lubpos(max_size, Mode::general)) {
    ++rep.checked;
    const Poset& p = d.poset();
    const ClosedSetLattice lat = lub_completion(d);
    auto fail = [&](const std::string& what) {
      rep.failures.push_back(what + " in " + inline_lubpo(d));
    };
    for (Elem x = 0; x < d.size(); ++x) {
      if (!lat.contains(in_embed(d, x))) fail("in(" + p.label(x) + ") not closed");
      for (Elem y = 0; y < d.size(); ++y) {
        if (p.leq(x, y) != in_embed(d, x).subset_of(in_embed(d, y))) {
          fail("in not an order embedding at " + p.label(x) + ", " + p.label(y));
        }
      }
    }
    for (const Natural& n : d.naturals()) {
      std::vector<ElemSet> parts;
      for (Elem x : n.set) parts.push_back(in_embed(d, x));
      if (lat.join(parts) != in_embed(d, n.lub)) {
        fail("natural lub of " + format_set(p, n.set) + " not sent to the join");
      }
    }
    for (ElemSet a : lat.sets()) {
      for (ElemSet b : lat.sets()) {
        if (!lat.contains(a & b)) fail("closed sets not closed under intersection");
        const ElemSet j = lat.join(a, b);
        if (!lat.contains(j) || !a.subset_of(j) || !b.subset_of(j)) fail("join not an upper bound");
        for (ElemSet u : lat.sets()) {
          if (a.subset_of(u) && b.subset_of(u) && !j.subset_of(u)) fail("join not least");
        }
      }
    }
    if (!lat.contains(p.all()) || !lat.contains(cl(d, ElemSet{}))) fail("missing top or bottom");
  }
  return rep;
}

SweepReport ccc_sweep() {
  SweepReport rep{"ccc laws"};
  for (Mode mode : {Mode::directed, Mode::general}) {
    std::vector<Lubpo> objs;
    for (const Lubpo& l : {fixtures::terminal(mode), fixtures::chain(2, mode),
                           fixtures::chain(3, mode), fixtures::vee(mode)}) {
      objs.push_back(class_completion(l, RuleClass::canonical));
    }
    objs = distinct(std::move(objs));
    for (const Lubpo& c : objs) {
      for (const Lubpo& d : objs) {
        for (const Lubpo& e : objs) {
          ++rep.checked;
          const CccReport r = ccc_laws(c, d, e);
          for (const LawCheck& law : r.laws) {
            if (!law.holds) {
              rep.failures.push_back(law.name + " (" + law.detail + ") for " + inline_lubpo(c) +
                                     " | " + inline_lubpo(d) + " | " + inline_lubpo(e));
            }
          }
          if (!r.eval_continuous) {
            rep.failures.push_back("eval not continuous for " + inline_lubpo(d) + " | " +
                                   inline_lubpo(e));
          }
        }
      }
    }
  }
  return rep;
}

SweepReport exponent_sweep() {
  SweepReport rep{"exponents"};
  std::vector<Lubpo> fx{fixtures::terminal(), delta_restrict(fixtures::p7())};
  for (bool all : {false, true}) {
    fx.push_back(fixtures::chain(2, Mode::directed, all));
    fx.push_back(fixtures::chain(3, Mode::directed, all));
    fx.push_back(fixtures::vee(Mode::directed, all));
    fx.push_back(fixtures::diamond(Mode::directed, all));
  }
  std::size_t s5_checks = 0;
  for (const Lubpo& d : fx) {
    for (const Lubpo& e : fx) {
      const std::string where = inline_lubpo(d) + " | " + inline_lubpo(e);
      const bool d5 = check_axiom(d, Axiom::S5).holds;
      const bool e5 = check_axiom(e, Axiom::S5).holds;
      if (d5 && e5) {
        ++s5_checks;
        if (!check_axiom(product(d, e).lubpo, Axiom::S5).holds) {
          rep.failures.push_back("S5 lost in product for " + where);
        }
      }
      std::optional<FunctionSpace> pw, gen;
      try {
        pw = pointwise_exp(d, e);
        gen = general_exp(d, e);
      } catch (const BoundExceeded&) {
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (!gen->lubpo.poset().same_order(pw->lubpo.poset())) {
        rep.failures.push_back("exponent carriers differ for " + where);
      }
      for (const Natural& n : gen->lubpo.naturals()) {
        if (!pw->lubpo.is_natural(n.set)) {
          rep.failures.push_back("general natural not pointwise for " + where);
          break;
        }
      }
      if (e5) {
        ++s5_checks;
        if (!check_axiom(gen->lubpo, Axiom::S5).holds) {
          rep.failures.push_back("S5 lost in general exponent for " + where);
        }
      }
    }
  }
  rep.note = std::to_string(s5_checks) + " S5 preservation checks";
  return rep;
}

SweepReport algebraicity_sweep(std::size_t max_size, std::size_t lemma_samples,
                               std::uint64_t seed) {
  SweepReport rep{"algebraicity"};
  const auto lubpos = small_lubpos(max_size, Mode::directed);
  for (const Lubpo& d : lubpos) {
    ++rep.checked;
    const bool cd = is_cdlubpo(d);
    const bool alg_s6 = is_algebraic(d) && check_axiom(d, Axiom::S6).holds;
    const FiniteDetermination fd = is_finite_determined(d);
    if (alg_s6 && !cd) rep.failures.push_back("algebraic with S6, not closed: " + inline_lubpo(d));
    if (fd.holds && !cd) rep.failures.push_back("finite-determined, not closed: " + inline_lubpo(d));
    if (alg_s6 && !determines(d, finite_elements(d))) {
      rep.failures.push_back("algebraic with S6, finite elements do not determine: " +
                             inline_lubpo(d));
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < lemma_samples; ++k) {
    const Lubpo& d = lubpos[rng() % lubpos.size()];
    const ElemSet a(rng() & ((std::uint64_t{1} << d.size()) - 1));
    const ElemSet hit = cl(d, a) & finite_elements(d);
    const std::vector<Elem> cands(hit.begin(), hit.end());
    ++rep.checked;
    if (cands.empty()) continue;
    const Elem x = cands[rng() % cands.size()];
    if (!d.poset().up(x).intersects(a)) {
      rep.failures.push_back("finite " + d.poset().label(x) + " in cl" +
                             format_set(d.poset(), a) + " below no member: " + inline_lubpo(d));
    }
  }
  return rep;
}

}  // namespace lubkit
