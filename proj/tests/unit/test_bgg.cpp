#include <algorithm>
#include <random>

#include "doctest.h"
#include "ogq/bgg.hpp"
#include "ogq/error.hpp"
#include "ogq/schurp.hpp"
#include "support.hpp"

using namespace ogq;
using test::classes;
using test::z;

namespace {

Poly swap_vars(const Poly& f, int i) {
  return f.map_monomials([i](const Monomial& m) {
    Monomial s = m;
    std::swap(s.exp[i - 1], s.exp[i]);
    return std::pair{s, Rat(1)};
  });
}

Poly hat_swap(const Poly& f) {
  return f.map_monomials([](const Monomial& m) {
    Monomial s = m;
    std::swap(s.exp[0], s.exp[1]);
    return std::pair{s, Rat((m.exp[0] + m.exp[1]) % 2 ? -1 : 1)};
  });
}

}  // namespace

TEST_CASE("divided differences on small inputs") {
  CHECK(bgg::apply_d(z(5, 1) * z(5, 1), 1) == z(5, 1) + z(5, 2));
  CHECK(bgg::apply_d(z(5, 1) * z(5, 2), 1).is_zero());
  CHECK(bgg::apply_d(z(5, 3) + z(5, 4), 3).is_zero());
  CHECK(bgg::apply_dhat1(z(5, 1) * z(5, 2)).is_zero());
  CHECK(bgg::apply_dhat1(z(5, 1)) == Poly::constant(5, Rat(-1)));
  CHECK(bgg::apply_dhat1(to_z(p_fun(StrictPartition{2}), 5)) == -z(5, 3) - z(5, 4) - z(5, 5));
  CHECK_THROWS_AS(bgg::apply_d(z(3, 1), 3), DomainError);
  CHECK_THROWS_AS(bgg::apply_d(z(3, 1), 0), DomainError);
}

TEST_CASE("point words") {
  CHECK(bgg::point_word(5).str() == "d2 d3 d4 dhat1 d2 d3 d1 d2 dhat1 d3 d2 d1 d4 d3 d2");
  CHECK(bgg::point_word(5).length() == 15);
  CHECK(bgg::line_weight_target(5, 3) - 3 == 15);
  CHECK(bgg::point_word(2).length() == 0);
  CHECK(bgg::point_word(3).length() == 4);
  CHECK(bgg::point_word(4).length() == 9);
  CHECK(bgg::point_word(6).length() == static_cast<std::size_t>(bgg::isotropic_grassmannian_dim(4, 6)));
}

TEST_CASE("operator identities on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 8), idx(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = test::random_homogeneous(rng, 5, deg(rng));
    const Poly g = test::random_homogeneous(rng, 5, deg(rng), 3);
    const int i = idx(rng);
    const Poly df = bgg::apply_d(f, i);
    CHECK(bgg::apply_d(df, i).is_zero());
    CHECK(bgg::apply_dhat1(bgg::apply_dhat1(f)).is_zero());
    CHECK(bgg::apply_d(f * g, i) == df * g + swap_vars(f, i) * bgg::apply_d(g, i));
    CHECK(bgg::apply_dhat1(f * g) == bgg::apply_dhat1(f) * g + hat_swap(f) * bgg::apply_dhat1(g));
    if (!df.is_zero()) CHECK(df.degree() == f.degree() - 1);
  }
}

TEST_CASE("lines in projective three-space") {
  CHECK(bgg::line_invariant(classes("2 2 2 2"), 3) == Rat(2));
  CHECK(bgg::line_invariant(classes("21 21"), 3) == Rat(1));
  CHECK(bgg::line_invariant(classes("2 2 21"), 3) == Rat(1));
}

TEST_CASE("line numbers") {
  CHECK(bgg::line_invariant(std::vector<StrictPartition>(15, StrictPartition{2})) == Rat(240240));
  CHECK(bgg::line_invariant(classes("2 42 4321")) == Rat(1));
  CHECK(bgg::line_invariant(classes("2 321 4321")) == Rat(0));
  CHECK(bgg::line_invariant(classes("43 4321")) == Rat(1));
  CHECK(bgg::line_invariant(classes("4321 43")) == Rat(1));
}

TEST_CASE("line numbers are permutation invariant") {
  std::mt19937_64 rng(3);
  for (const char* text : {"2 3 421 421", "21 421 431", "2 2 3 4 3 421"}) {
    auto cls = classes(text);
    const Rat base = bgg::line_invariant(cls);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(cls.begin(), cls.end(), rng);
      CHECK(bgg::line_invariant(cls) == base);
    }
  }
}

TEST_CASE("line number input checks") {
  try {
    bgg::line_invariant(classes("2 2"));
    FAIL("expected a dimension error");
  } catch (const DimensionError& e) {
    CHECK(e.expected_weight() == 17);
    CHECK(e.actual_weight() == 4);
  }
  CHECK_THROWS_AS(bgg::line_invariant(classes("1 4321 4321")), DomainError);
  CHECK_THROWS_AS(bgg::line_invariant(classes("5 4321")), DomainError);
}

TEST_CASE("line-number keys") {
  const auto keys = bgg::line_keys(5);
  CHECK(keys.size() == 1071);
  CHECK(std::find(keys.begin(), keys.end(), classes("431 432")) != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), std::vector<StrictPartition>(15, StrictPartition{2})) != keys.end());
}
