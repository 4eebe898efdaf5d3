#include <type_traits>

#include "doctest.h"
#include "ogq/error.hpp"
#include "ogq/rational.hpp"

using ogq::Rat;

static_assert(!std::is_constructible_v<Rat, double>);
static_assert(!std::is_constructible_v<Rat, float>);
static_assert(!std::is_constructible_v<Rat, long double>);
static_assert(!std::is_convertible_v<Rat, double>);

TEST_CASE("rationals stay in lowest terms") {
  const Rat a = Rat(6) / Rat(-4);
  CHECK(a == Rat(mpz_class(-3), mpz_class(2)));
  CHECK(a.str() == "-3/2");
  CHECK(a.is_canonical());
  CHECK(a.den() == 2);
  CHECK((a * Rat(2)).is_integer());
  CHECK(Rat(mpz_class(4), mpz_class(-8)).str() == "-1/2");
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("35/32") == Rat(mpz_class(35), mpz_class(32)));
  CHECK(Rat::parse("-33/64").sign() < 0);
  CHECK(Rat::parse("+1/2") == Rat(1) / Rat(2));
  CHECK(Rat::parse(" 17 ") == Rat(17));
  CHECK(Rat::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rat::parse("1.5"), ogq::ParseError);
  CHECK_THROWS_AS(Rat::parse("1e3"), ogq::ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ogq::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/"), ogq::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ogq::DomainError);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), ogq::DomainError);
  CHECK_THROWS_AS(Rat(mpz_class(1), mpz_class(0)), ogq::DomainError);
}

TEST_CASE("ordering, abs and powers") {
  CHECK(Rat(1) / Rat(3) < Rat(1) / Rat(2));
  CHECK(Rat(-5).abs() == Rat(5));
  CHECK(pow(Rat(2) / Rat(3), 3) == Rat(8) / Rat(27));
  CHECK(pow(Rat(7), 0) == Rat(1));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(0).height() >= 1);
}
