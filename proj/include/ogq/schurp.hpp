#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ogq/partition.hpp"
#include "ogq/polynomial.hpp"
#include "ogq/rational.hpp"

namespace ogq {

/// Polynomial in the odd power sums p1, p3, p5, ... . A monomial is the
/// ascending list of its odd indices, so {1,1,3} is p1^2 p3 and has grade 5.
class PPoly {
 public:
  using Key = std::vector<std::uint16_t>;
  using Terms = std::map<Key, Rat>;

  PPoly() = default;
  static PPoly constant(const Rat& c);
  /// The single generator p_k; k must be odd and positive.
  static PPoly power_sum(int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Rat& c);
  Rat coefficient(const Key& k) const;

  /// Grades of the terms present; {} for zero.
  std::vector<int> grades() const;
  bool is_homogeneous_of(int grade) const;

  PPoly& operator+=(const PPoly& o);
  PPoly& operator-=(const PPoly& o);
  PPoly& operator*=(const Rat& c);
  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(PPoly a, const Rat& c) { return a *= c; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend bool operator==(const PPoly&, const PPoly&) = default;

  std::string str() const;

  static int grade_of(const Key& k);

 private:
  Terms terms_;
};

/// Coefficient of t^r in exp(2 * sum_{k odd} p_k t^k / k).
const PPoly& q_row(int r);

/// Schur Q-function: Q_r for one part, the two-row formula for two parts,
/// and the Pfaffian of two-row values (zero-padded to even length) beyond.
PPoly q_fun(const StrictPartition& lambda);

/// Q-function evaluated through the Pfaffian on an explicit part list that
/// may end in a zero; exposed so padding invariance can be checked.
PPoly q_pfaffian(const std::vector<int>& parts);

/// Schur P-function, 2^{-length} Q.
const PPoly& p_fun(const StrictPartition& lambda);

/// Sends p_k to -(1/2)(z_1^k + ... + z_n^k).
Poly to_z(const PPoly& f, int n);

/// Coefficients c_nu with f = sum c_nu P_nu, solved gradewise.
std::map<StrictPartition, Rat> expand_in_p_basis(const PPoly& f);

}  // namespace ogq
