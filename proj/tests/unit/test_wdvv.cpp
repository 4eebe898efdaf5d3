#include <algorithm>
#include <random>

#include "doctest.h"
#include "ogq/error.hpp"
#include "ogq/schubert.hpp"
#include "ogq/wdvv.hpp"
#include "support.hpp"

using namespace ogq;
using namespace ogq::wdvv;
using test::classes;

namespace {

StrictPartition P(const char* s) { return StrictPartition::parse(s); }

GWKey key(int d, const char* text) { return GWKey::make(d, classes(text)); }

// Solves a relation for `target`, looking every other factor up through `b`.
std::optional<Rat> solve_with(Bootstrapper& b, int d, const char* lambdas, const GWKey& target) {
  const auto rel = build_relation(d, classes(lambdas));
  return solve_for(rel, target, [&](const GWKey& k) -> std::optional<Rat> {
    if (k == target) return std::nullopt;
    return b.value(k);
  });
}

}  // namespace

TEST_CASE("dimension condition") {
  CHECK(dimension_ok(1, std::vector<StrictPartition>(15, StrictPartition{2})));
  CHECK(dimension_ok(7, std::vector<StrictPartition>(7, StrictPartition{4, 3, 2, 1})));
  CHECK_FALSE(dimension_ok(2, classes("2 2")));
  CHECK(weight_target(2, 4) == 27);
}

TEST_CASE("keys are permutation invariant") {
  CHECK(key(2, "4321 2 431 421") == key(2, "2 421 431 4321"));
  CHECK(key(2, "4321 2 431 421").str() == "I2(2,421,431,4321)");
  CHECK_THROWS_AS(GWKey::make(-1, {}), DomainError);
  CHECK_THROWS_AS(key(1, "5 4321"), DomainError);
}

TEST_CASE("reductions") {
  const auto r0 = reduce(key(0, "2 421 1"));
  REQUIRE(r0.value);
  CHECK(*r0.value == Rat(1));
  CHECK(r0.rule == Provenance::Classical);
  const auto r0b = reduce(key(0, "2 421 21"));
  REQUIRE(r0b.value);
  CHECK(r0b.value->is_zero());

  const auto r1 = reduce(key(1, "1 43 4321"));
  CHECK_FALSE(r1.value);
  CHECK(r1.multiplier == Rat(1));
  CHECK(r1.key == key(1, "43 4321"));
  CHECK(r1.rule == Provenance::DivisorAxiom);

  const auto r3 = reduce(key(3, "1 1 421 431 4321 4321"));
  CHECK(r3.multiplier == Rat(9));
  CHECK(r3.key == key(3, "421 431 4321 4321"));

  const auto rf = reduce(key(3, "0 3 421 43 4321 4321"));
  REQUIRE(rf.value);
  CHECK(rf.value->is_zero());
  CHECK(rf.rule == Provenance::FundamentalAxiom);

  const auto rd = reduce(key(2, "2 2"));
  REQUIRE(rd.value);
  CHECK(rd.rule == Provenance::DimensionZero);
}

TEST_CASE("relation instances") {
  CHECK_THROWS_AS(build_relation(2, classes("421 1 432 2 4321")), DomainError);
  CHECK_THROWS_AS(build_relation(2, classes("1 2 3")), DomainError);
  CHECK_THROWS_AS(build_relation(0, classes("421 1 421 2 4321")), DomainError);
  const auto rel = build_relation(2, classes("421 1 421 2 4321"));
  CHECK(rel.terms.size() > 0);
  for (const auto& t : rel.terms) {
    CHECK(t.factors.size() <= 2);
    for (const auto& f : t.factors) {
      CHECK(f.d >= 1);
      CHECK(dimension_ok(f.d, f.classes));
    }
  }
}

TEST_CASE("worked conic example from both role assignments") {
  GWTable table;
  Bootstrapper b(table);
  const auto target = key(2, "2 421 431 4321");
  const auto first = solve_with(b, 2, "421 1 421 2 4321", target);
  const auto second = solve_with(b, 2, "2 1 421 421 4321", target);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(*first == Rat(3));
  CHECK(*second == Rat(3));
}

TEST_CASE("worked cubic example from both role assignments") {
  GWTable table;
  Bootstrapper b(table);
  const auto target = key(3, "421 431 4321 4321");
  const auto first = solve_with(b, 3, "431 1 432 421 4321", target);
  const auto second = solve_with(b, 3, "421 1 432 431 4321", target);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(*first == Rat(2));
  CHECK(*second == Rat(2));
}

TEST_CASE("conic numbers") {
  GWTable table;
  Bootstrapper b(table);
  CHECK(b.value(key(2, "2 421 431 4321")) == Rat(3));
  CHECK(b.value(key(2, "3 421 431 432")) == Rat(5));
  CHECK(b.value(key(2, "21 421 431 432")) == Rat(4));
  CHECK(b.value(key(2, "421 432 4321")) == Rat(1));
  CHECK(b.value(key(2, "431 431 4321")) == Rat(1));
  CHECK(b.value(key(2, "431 432 432")) == Rat(2));
  CHECK(b.value(key(2, "1 431 432 432")) == Rat(4));
  CHECK(table.find(key(2, "1 431 432 432"))->provenance == Provenance::DivisorAxiom);
  CHECK(b.cross_checks() > 0);
  const Entry* e = table.find(key(2, "2 421 431 4321"));
  REQUIRE(e);
  CHECK(e->provenance == Provenance::Wdvv);
  CHECK(e->provenance_str().rfind("wdvv(case-", 0) == 0);
  CHECK_FALSE(e->witness.empty());
}

TEST_CASE("a cubic number") {
  GWTable table;
  Bootstrapper b(table);
  CHECK(b.value(key(3, "2 2 2 2 4321 4321 4321")) == Rat(81));
  for (const auto& [k, e] : table.entries()) {
    CHECK(e.value.is_integer());
    CHECK(e.value.sign() >= 0);
  }
}

TEST_CASE("case patterns and candidates") {
  CHECK(case_patterns().size() == 17);
  CHECK(case_patterns().front().id == 1);
  CHECK(case_patterns()[2].rho == P("421"));
  const auto cands = candidates(key(2, "2 421 431 4321"));
  REQUIRE_FALSE(cands.empty());
  CHECK(cands.front().case_id == 3);
  CHECK(join_classes(cands.front().lambdas(), ",") == "421,1,421,2,4321");
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      CHECK_FALSE((cands[i].lambdas() == cands[j].lambdas()));
}

TEST_CASE("table insertion guards against conflicting values") {
  GWTable t;
  CHECK(t.insert(key(1, "431 432"), Entry{Rat(1), Provenance::LineFormula, 0, {}}));
  CHECK_FALSE(t.insert(key(1, "432 431"), Entry{Rat(1), Provenance::Wdvv, 4, "x"}));
  CHECK_THROWS_AS(t.insert(key(1, "431 432"), Entry{Rat(2), Provenance::Wdvv, 0, {}}), InconsistentDerivation);
}

TEST_CASE("cache round trip is exact") {
  GWTable table;
  Bootstrapper b(table);
  b.value(key(2, "431 432 432"));
  b.value(key(0, "2 421 1"));
  b.value(key(2, "1 421 432 4321"));
  const std::string text = table.serialize();
  const GWTable back = GWTable::deserialize(text);
  CHECK(back.size() == table.size());
  CHECK(back.serialize() == text);
  for (const auto& [k, e] : table.entries()) {
    const Entry* f = back.find(k);
    REQUIRE(f);
    CHECK(f->value == e.value);
    CHECK(f->provenance_str() == e.provenance_str());
    CHECK(f->witness == e.witness);
  }
}

TEST_CASE("malformed cache records are rejected") {
  CHECK_THROWS_AS(GWTable::deserialize("{not json}\n"), ParseError);
  CHECK_THROWS_AS(GWTable::deserialize(R"({"n":5,"d":1,"classes":[[4,3,2],[4,3,1]],"value":"1","provenance":"line-formula"})"),
                  ParseError);
  CHECK_THROWS_AS(GWTable::deserialize(R"({"n":5,"d":1,"classes":[[4,3,1],[4,3,2]],"value":"1","provenance":"guess"})"),
                  ParseError);
  CHECK_THROWS_AS(GWTable::deserialize(R"({"n":5,"d":1,"classes":[[4,3,1],[4,3,2]],"value":"0.5","provenance":"line-formula"})"),
                  ParseError);
  CHECK(GWTable::load("/nonexistent/cache.jsonl").size() == 0);
}

TEST_CASE("divisor axiom on random known keys") {
  GWTable table;
  Bootstrapper b(table);
  b.value(key(2, "431 432 432"));
  b.value(key(2, "3 421 431 432"));
  std::vector<GWKey> known;
  for (const auto& [k, e] : table.entries())
    if (k.d >= 1 && e.provenance != Provenance::DivisorAxiom) known.push_back(k);
  REQUIRE(known.size() >= 20);
  std::mt19937_64 rng(11);
  std::shuffle(known.begin(), known.end(), rng);
  for (std::size_t i = 0; i < 20; ++i) {
    auto cls = known[i].classes;
    cls.push_back(StrictPartition{1});
    const auto r = reduce(GWKey::make(known[i].d, cls));
    CHECK(r.key == known[i]);
    CHECK(r.multiplier == Rat(known[i].d));
    CHECK(b.value(GWKey::make(known[i].d, cls)) == Rat(known[i].d) * table.find(known[i])->value);
  }
}

TEST_CASE("relations are invariant under permuting the free classes") {
  GWTable table;
  Bootstrapper b(table);
  std::mt19937_64 rng(5);
  const auto target = key(3, "2 2 2 2 4321 4321 4321");
  const Rat expected = b.value(target);
  auto lambdas = classes("2 2 2 4321 1 432 2 4321");
  const auto base = build_relation(3, lambdas);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(lambdas.begin(), lambdas.begin() + 4, rng);
    const auto rel = build_relation(3, lambdas);
    REQUIRE(rel.terms.size() == base.terms.size());
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      CHECK(rel.terms[i].coeff == base.terms[i].coeff);
      CHECK(rel.terms[i].factors == base.terms[i].factors);
    }
  }
  const auto v = solve_for(base, target, [&](const GWKey& k) -> std::optional<Rat> {
    if (k == target) return std::nullopt;
    return b.value(k);
  });
  if (v) CHECK(*v == expected);
}

TEST_CASE("censuses") {
  CHECK(conic_case_keys().size() == 1459);
  const auto lines = keys_of_degree(1);
  CHECK(lines.size() == 1071);
}
