#pragma once

#include <random>
#include <string>
#include <vector>

#include "ogq/partition.hpp"
#include "ogq/polynomial.hpp"
#include "ogq/rational.hpp"

namespace test {

inline std::string data_path(const std::string& rel) { return std::string(OGQ_SOURCE_DIR) + "/data/" + rel; }

inline ogq::Rat random_rat(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return ogq::Rat(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Random homogeneous polynomial of the given degree, up to `terms` terms.
inline ogq::Poly random_homogeneous(std::mt19937_64& rng, int nvars, int degree, int terms = 6) {
  ogq::Poly f(nvars);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  for (int t = 0; t < terms; ++t) {
    ogq::Monomial m;
    for (int k = 0; k < degree; ++k) ++m.exp[var(rng)];
    f.add_term(m, random_rat(rng));
  }
  return f;
}

inline ogq::Poly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms = 5) {
  ogq::Poly f(nvars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) f += random_homogeneous(rng, nvars, deg(rng), 1);
  return f;
}

inline ogq::Poly z(int nvars, int i) { return ogq::Poly::variable(nvars, i - 1); }

inline std::vector<ogq::StrictPartition> classes(const std::string& text) { return ogq::parse_partition_list(text); }

}  // namespace test
