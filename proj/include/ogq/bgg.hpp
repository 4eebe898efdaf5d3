#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ogq/partition.hpp"
#include "ogq/polynomial.hpp"
#include "ogq/rational.hpp"

namespace ogq::bgg {

/// One divided-difference symbol: D(i) for 1 <= i <= n-1, or the signed
/// operator DHat1.
struct OpSymbol {
  enum class Kind { D, DHat1 } kind = Kind::D;
  int index = 0;  // meaningful for Kind::D only

  static OpSymbol d(int i) { return {Kind::D, i}; }
  static OpSymbol dhat1() { return {Kind::DHat1, 0}; }
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// Composition of operators written left to right; application runs from
/// the rightmost symbol to the leftmost.
struct OperatorWord {
  std::vector<OpSymbol> symbols;

  std::size_t length() const { return symbols.size(); }
  std::string str() const;
  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

/// (f - s_i f) / (z_i - z_{i+1}), 1-based i.
Poly apply_d(const Poly& f, int i);

/// (f(z) - f(-z_2, -z_1, z_3, ...)) / (-z_1 - z_2).
Poly apply_dhat1(const Poly& f);

Poly apply_word(const OperatorWord& word, Poly f);

/// The composition sending the point class of the line space OG(n-2, 2n)
/// to 1. Its length equals dim OG(n-2, 2n).
OperatorWord point_word(int n);

/// Dimension of OG(k, 2n) as a variety.
int isotropic_grassmannian_dim(int k, int n);

/// Dimension condition for degree-1 invariants of OG(n,2n).
int line_weight_target(int n, int num_classes);

/// The polynomial  d-hat_1 P_lambda(z_1..z_n), memoized.
const Poly& incidence_polynomial(const StrictPartition& lambda, int n);

/// Number of lines meeting general translates of X_{lambda^i}. Every class
/// must have weight >= 2 and parts < n, and the weights must satisfy the
/// dimension condition (DimensionError otherwise).
Rat line_invariant(const std::vector<StrictPartition>& classes, int n = 5);

/// All unordered multisets of classes with parts <= n-1, weights >= 2,
/// satisfying the degree-1 dimension condition; canonical order.
std::vector<std::vector<StrictPartition>> line_keys(int n = 5);

struct LineNumber {
  std::vector<StrictPartition> classes;
  Rat value;
};

/// Evaluates line_invariant over line_keys(n) using `jobs` worker threads.
/// The result order matches line_keys(n).
std::vector<LineNumber> enumerate_line_numbers(int n = 5, int jobs = 1);

}  // namespace ogq::bgg
