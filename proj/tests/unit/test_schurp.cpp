#include <map>

#include "doctest.h"
#include "ogq/error.hpp"
#include "ogq/schurp.hpp"
#include "support.hpp"

using ogq::PPoly;
using ogq::Rat;
using ogq::StrictPartition;

namespace {

PPoly p(int k) { return PPoly::power_sum(k); }
Rat frac(int a, int b) { return Rat(a) / Rat(b); }

Rat factorial(int n) {
  Rat f(1);
  for (int i = 2; i <= n; ++i) f *= Rat(i);
  return f;
}

// Direct expansion of exp(2 sum p_k t^k / k): sum over odd partitions of r of
// prod (2 p_k / k)^{m_k} / m_k!.
PPoly q_row_oracle(int r) {
  PPoly out;
  for (const auto& parts : ogq::odd_partitions(r)) {
    std::map<int, int> mult;
    for (int k : parts) ++mult[k];
    PPoly term = PPoly::constant(Rat(1));
    for (const auto& [k, m] : mult) {
      for (int i = 0; i < m; ++i) term = term * (p(k) * frac(2, k));
      term = term * (Rat(1) / factorial(m));
    }
    out += term;
  }
  if (r == 0) out = PPoly::constant(Rat(1));
  return out;
}

}  // namespace

TEST_CASE("Q rows") {
  CHECK(ogq::q_row(0) == PPoly::constant(Rat(1)));
  CHECK(ogq::q_row(2) == p(1) * p(1) * Rat(2));
  CHECK(ogq::q_row(3) == (p(1) * p(1) * p(1) * Rat(4) + p(3) * Rat(2)) * frac(1, 3));
  for (int r = 0; r <= 12; ++r) CHECK(ogq::q_row(r) == q_row_oracle(r));
}

TEST_CASE("Q and P functions") {
  CHECK(ogq::q_fun(StrictPartition{2}) == ogq::q_row(2));
  CHECK(ogq::q_fun(StrictPartition{2, 1}) == (p(1) * p(1) * p(1) * Rat(4) - p(3) * Rat(4)) * frac(1, 3));
  CHECK(ogq::q_fun(StrictPartition()) == PPoly::constant(Rat(1)));
  CHECK(ogq::p_fun(StrictPartition{2}) == p(1) * p(1));
  CHECK(ogq::p_fun(StrictPartition{1}) == p(1));
  CHECK(ogq::p_fun(StrictPartition{3}) == (p(1) * p(1) * p(1) * Rat(2) + p(3)) * frac(1, 3));
  CHECK_THROWS_AS(PPoly::power_sum(2), ogq::DomainError);
}

TEST_CASE("zero padding does not change the Pfaffian") {
  for (const auto& parts : std::vector<std::vector<int>>{{3, 1}, {4, 2}, {4, 3, 2, 1}, {5, 3}}) {
    auto padded = parts;
    padded.push_back(0);
    padded.push_back(0);
    CHECK(ogq::q_pfaffian(parts) == ogq::q_pfaffian(padded));
  }
  CHECK(ogq::q_pfaffian({4, 2, 1}) == ogq::q_pfaffian({4, 2, 1, 0}));
}

TEST_CASE("images in the z variables") {
  ogq::Poly s(5);
  for (int i = 1; i <= 5; ++i) s += test::z(5, i);
  CHECK(ogq::to_z(ogq::p_fun(StrictPartition{2}), 5) == s * s * frac(1, 4));
  CHECK(ogq::to_z(PPoly::constant(Rat(1)), 5) == ogq::Poly::constant(5, Rat(1)));
  const ogq::Poly z1 = test::z(2, 1), z2 = test::z(2, 2);
  CHECK(ogq::to_z(p(3), 2) == (z1 * z1 * z1 + z2 * z2 * z2) * frac(-1, 2));
}

TEST_CASE("expansion in the P basis") {
  const auto e3 = ogq::expand_in_p_basis(ogq::p_fun(StrictPartition{3}));
  CHECK(e3 == std::map<StrictPartition, Rat>{{StrictPartition{3}, Rat(1)}});
  const auto e2 = ogq::expand_in_p_basis(p(1) * p(1));
  CHECK(e2 == std::map<StrictPartition, Rat>{{StrictPartition{2}, Rat(1)}});
  const auto sq = ogq::expand_in_p_basis(ogq::p_fun(StrictPartition{1}) * ogq::p_fun(StrictPartition{1}));
  CHECK(sq == e2);
}

TEST_CASE("P functions expand to themselves") {
  for (int w = 0; w <= 12; ++w)
    for (const auto& lam : ogq::strict_partitions(w, w))
      CHECK(ogq::expand_in_p_basis(ogq::p_fun(lam)) == std::map<StrictPartition, Rat>{{lam, Rat(1)}});
}

TEST_CASE("structure constants are nonnegative integers") {
  std::vector<StrictPartition> all;
  for (int w = 1; w <= 11; ++w)
    for (const auto& lam : ogq::strict_partitions(w, w)) all.push_back(lam);
  int products = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.weight() + b.weight() > 12 || b < a) continue;
      for (const auto& [nu, c] : ogq::expand_in_p_basis(ogq::p_fun(a) * ogq::p_fun(b))) {
        CHECK(nu.weight() == a.weight() + b.weight());
        CHECK(c.is_integer());
        CHECK(c.sign() > 0);
      }
      ++products;
    }
  CHECK(products > 100);
}
