#include "doctest.h"
#include "lubkit/category.hpp"
#include "lubkit/errors.hpp"
#include "lubkit/fixtures.hpp"
#include "lubkit/format.hpp"
#include "lubkit/rule_classes.hpp"

using namespace lubkit;

namespace {

void check_round_trip(const Lubpo& d) {
  LubFile f = parse_lub(serialize(d));
  CHECK(f.lubpo == d);
  CHECK_FALSE(f.proper.has_value());
}

std::pair<std::size_t, std::size_t> error_position(std::string_view text) {
  try {
    parse_lub(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("parse the P7 file") {
  LubFile f = read_lub_file(LUBKIT_FIXTURE_DIR "/p7.lub");
  CHECK(f.lubpo == fixtures::p7());
  CHECK(f.lubpo.mode() == Mode::general);
}

TEST_CASE("round trips") {
  check_round_trip(fixtures::p7());
  check_round_trip(delta_restrict(fixtures::p7()));
  check_round_trip(class_completion(fixtures::p7(), RuleClass::canonical));
  check_round_trip(fixtures::diamond(Mode::directed, true));
  check_round_trip(fixtures::terminal());
  Lubpo c2 = fixtures::chain(2, Mode::directed, true);
  check_round_trip(product(c2, fixtures::vee()).lubpo);
  check_round_trip(product(product(c2, c2).lubpo, c2).lubpo);
  check_round_trip(pointwise_exp(c2, c2).lubpo);
  check_round_trip(general_exp(fixtures::vee(), c2).lubpo);

  LubFile r{fixtures::diamond(), ElemSet{1, 3}};
  LubFile back = parse_lub(serialize(r));
  CHECK(back.proper == ElemSet{1, 3});
  CHECK(back.as_rpo().blind() == ElemSet{0, 2});
}

TEST_CASE("rpo fixture") {
  LubFile f = read_lub_file(LUBKIT_FIXTURE_DIR "/p7-realizers.lub");
  Rpo r = f.as_rpo();
  CHECK(r.blind() == ElemSet{0});
}

TEST_CASE("sets with labels containing commas") {
  ProductSpace p = product(fixtures::chain(2), fixtures::chain(2));
  CHECK(parse_set(p.lubpo.poset(), "{(x0,x1), (x1,x1)}") ==
        ElemSet{p.pair(0, 1), p.pair(1, 1)});
  CHECK(parse_set(p.lubpo.poset(), "{}").empty());
  CHECK(parse_set(fixtures::p7_order(), "a, b") == ElemSet{0, 1});
  CHECK_THROWS_AS(parse_set(fixtures::p7_order(), "{a,q}"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("elements\n") == std::pair<std::size_t, std::size_t>{1, 9});
  CHECK(error_position("order a<b\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_position("elements a b\norder a<q\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(error_position("elements a b\norder ab\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(error_position("elements a a\n") == std::pair<std::size_t, std::size_t>{1, 12});
  CHECK(error_position("elements a b\nmode fast\n") == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(error_position("elements a b\nnatural {a,x} -> b\n") ==
        std::pair<std::size_t, std::size_t>{2, 12});
  CHECK(error_position("elements a b\nnatural {a,b} b\n") ==
        std::pair<std::size_t, std::size_t>{2, 15});
  CHECK(error_position("elements a b\nfoo\n") == std::pair<std::size_t, std::size_t>{2, 1});

  CHECK_THROWS_AS(parse_lub("elements a b c d e\norder d<b e<b e<c b<a c<a\n"
                            "natural {b,c} -> b\n"),
                  LubMismatch);
  CHECK_THROWS_AS(parse_lub("elements a b\norder a<b b<a\n"), CycleError);
  CHECK_THROWS_AS(parse_lub("elements a b\norder a<b\nmode directed\nnatural {a,b} -> b\nnatural {} -> a\n"),
                  NotDirected);
}

TEST_CASE("certificates survive JSON") {
  Lubpo d = fixtures::p7();
  RuleSystem r = class_rule_system(d.poset(), RuleClass::sazonov);
  auto ded = derive_in_class(d, RuleClass::sazonov, ElemSet{2, 3}, 0);
  REQUIRE(ded);
  nlohmann::json j = certificate_json(r, *ded);
  CHECK(j["nodes"][j["root"].get<std::size_t>()]["label"] == "{c,d}");
  Deduction back = certificate_from_json(nlohmann::json::parse(j.dump()));
  DenseSet start(std::size_t{1} << d.size());
  for (const Natural& n : d.naturals()) start.insert(n.set.bits());
  CHECK(verify_deduction(r, start, back));

  nlohmann::json bad = j;
  bad["nodes"][0]["rule"] = "S7";
  bad["nodes"][0]["premises"] = nlohmann::json::array();
  CHECK_FALSE(verify_deduction(r, start, certificate_from_json(bad)));
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"root", 0}}), ParseError);
}
