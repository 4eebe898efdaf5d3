#include <random>

#include "doctest.h"
#include "ogq/defcheck.hpp"
#include "ogq/error.hpp"
#include "support.hpp"

using namespace ogq;
using namespace ogq::defcheck;

namespace {

DeformationFixture genus7() { return load_fixture(test::data_path("fixtures/genus7.txt")); }

// Rank by Gauss-Jordan elimination pivoting on the first nonzero entry of
// the remaining rows; independent of row_reduce.
std::size_t oracle_rank(RatMatrix m) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t pr = m.rows(), pc = m.cols();
    for (std::size_t i = r; i < m.rows() && pr == m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == m.rows()) break;
    m.swap_rows(r, pr);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, pc).is_zero()) continue;
      const Rat f = m(i, pc) / m(r, pc);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = j == pc ? Rat(1) : m(r, j) / m(r, pc);
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("polynomial syntax") {
  const Poly t = Poly::variable(kVars, 0), u = Poly::variable(kVars, 1), x0 = Poly::variable(kVars, 2);
  CHECK(parse_polynomial("t^2 - 3/2*t*u") == t * t - t * u * (Rat(3) / Rat(2)));
  CHECK(parse_polynomial("-(t + u)^2") == -((t + u) * (t + u)));
  CHECK(parse_polynomial("u*(2*x0^2)") == u * x0 * x0 * Rat(2));
  CHECK(parse_polynomial("0").is_zero());
  CHECK_THROWS_AS(parse_polynomial("t +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(t"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1.5*t"), ParseError);
}

TEST_CASE("dual sextic basis") {
  const auto fix = genus7();
  const auto dual = dual_sextic_basis(fix.points);
  REQUIRE(dual.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(dual[i].is_homogeneous());
    CHECK(dual[i].degree() == 6);
    Rat row_sum(0);
    for (std::size_t j = 0; j < 7; ++j) {
      const std::array<Rat, 2> at{fix.points[j], Rat(1)};
      CHECK(evaluate(dual[i], at) == Rat(i == j ? 1 : 0));
      row_sum += evaluate(dual[j], std::array<Rat, 2>{fix.points[i], Rat(1)});
    }
    CHECK(row_sum == Rat(1));
  }
  CHECK_THROWS_AS(dual_sextic_basis({Rat(0), Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("shipped fixture is valid") {
  const auto fix = genus7();
  CHECK_NOTHROW(validate(fix));
  for (const auto& c : column_scalars(fix)) CHECK(c == Rat(1));
}

TEST_CASE("first-order system") {
  const auto fix = genus7();
  const auto sys = first_order_system(fix);
  CHECK(sys.matrix.rows() == 14);
  CHECK(sys.matrix.cols() == 15);
  // The epsilon-linear forms vanish at every marked point before division.
  for (const auto& forms : sys.forms)
    for (const auto& f : forms) {
      if (f.is_zero()) continue;
      CHECK(f.degree() == 13);
      for (const auto& r : fix.points) CHECK(evaluate(f, std::array<Rat, 2>{r, Rat(1)}).is_zero());
    }
  CHECK(oracle_rank(sys.matrix) == 14);
}

TEST_CASE("unramified verdict") {
  const auto v = check_unramified(genus7());
  CHECK(v.unramified);
  CHECK(v.rank == 14);
  REQUIRE(v.kernel.size() == 1);
  for (int j = 0; j < kPoints; ++j) CHECK(v.kernel[0][j] == v.kernel[0][0]);
  for (int k = kPoints; k < kUnknowns; ++k) CHECK(v.kernel[0][k].is_zero());
}

TEST_CASE("zeroed equations leave everything free") {
  const auto fix = load_fixture(test::data_path("fixtures/zeroed.txt"));
  CHECK_NOTHROW(validate(fix));
  const auto v = check_unramified(fix);
  CHECK_FALSE(v.unramified);
  CHECK(v.kernel.size() == 15);
  CHECK(v.trivial_in_kernel);
}

TEST_CASE("perturbed surface equation is rejected") {
  auto fix = genus7();
  fix.F1 += Poly::variable(kVars, 0) * Poly::variable(kVars, 2) * Poly::variable(kVars, 3);
  CHECK_THROWS_AS(validate(fix), FixtureError);
  CHECK_THROWS_AS(first_order_system(fix), IndivisibleError);
}

TEST_CASE("fixture validation catches transcription errors") {
  {
    auto fix = genus7();
    fix.points[1] = fix.points[0];
    CHECK_THROWS_AS(validate(fix), FixtureError);
  }
  {
    auto fix = genus7();
    fix.D(0, 3) += Rat(1);
    CHECK_THROWS_AS(validate(fix), FixtureError);
  }
  {
    auto fix = genus7();
    fix.L = fix.L + Poly::variable(kVars, 0) * Poly::variable(kVars, 4);
    CHECK_THROWS_AS(validate(fix), FixtureError);
  }
  {
    auto fix = genus7();
    fix.iota[2] = fix.iota[2] * Poly::variable(2, 0);
    CHECK_THROWS_AS(validate(fix), FixtureError);
  }
}

TEST_CASE("verdict is invariant under rescaling columns") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    auto fix = genus7();
    std::vector<Rat> c;
    for (int j = 0; j < kPoints; ++j) {
      Rat s = test::random_rat(rng);
      if (s.is_zero()) s = Rat(3);
      c.push_back(s);
      for (int k = 0; k < kCoords; ++k) fix.D(k, j) *= s;
    }
    CHECK_NOTHROW(validate(fix));
    const auto sys = first_order_system(fix);
    const auto v = check_unramified(fix);
    CHECK(v.rank == oracle_rank(sys.matrix));
    CHECK(v.unramified);
    REQUIRE(v.kernel.size() == 1);
    for (int j = 1; j < kPoints; ++j) CHECK(v.kernel[0][j] * c[j] == v.kernel[0][0] * c[0]);
  }
}

TEST_CASE("fixture syntax errors") {
  CHECK_THROWS_AS(parse_fixture("points = 0, 1\n"), ParseError);
  CHECK_THROWS_AS(parse_fixture("bogus = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_fixture("  continuation\n"), ParseError);
  CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.txt"), IoError);
}
