#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ogq/partition.hpp"

namespace ogq::schubert {

inline constexpr int kN = 5;          // OG(5,10)
inline constexpr int kDim = 10;       // n(n-1)/2
inline constexpr int kBasisSize = 16;

/// Integer combination of Schubert classes tau_lambda, lambda inside (4,3,2,1).
class CohoElem {
 public:
  using Coeffs = std::map<StrictPartition, long>;

  CohoElem() = default;
  /// Throws DomainError unless every part lies in {1,..,4}.
  static CohoElem basis(const StrictPartition& lambda);
  /// Parses "2*42 + 321", "431", "0".
  static CohoElem parse(const std::string& text);

  const Coeffs& coeffs() const { return coeffs_; }
  long coefficient(const StrictPartition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(const StrictPartition& lambda, long c);

  CohoElem& operator+=(const CohoElem& o);
  friend CohoElem operator+(CohoElem a, const CohoElem& b) { return a += b; }
  friend bool operator==(const CohoElem&, const CohoElem&) = default;

  /// "2*42 + 321" with terms in canonical class order, "0" when empty.
  std::string str() const;

 private:
  Coeffs coeffs_;
};

/// The 16 classes of H*(OG(5,10)) in canonical order (codimension 0..10).
const std::vector<StrictPartition>& basis();

/// Index of lambda in basis(); DomainError if lambda is not a basis class.
int basis_index(const StrictPartition& lambda);

/// Cup product of two basis classes, read from the table built once from
/// P-function structure constants with parts >= 5 discarded.
const CohoElem& mult(const StrictPartition& a, const StrictPartition& b);
CohoElem mult(const CohoElem& a, const CohoElem& b);

/// Complement of the part set in {1,2,3,4}.
StrictPartition poincare_dual(const StrictPartition& lambda);

/// Triple intersection number; 0 unless the codimensions sum to 10.
long triple(const StrictPartition& a, const StrictPartition& b, const StrictPartition& c);

/// Classes rho with tau_1 * tau_rho containing tau_target, in canonical order.
std::vector<StrictPartition> divisor_predecessors(const StrictPartition& target);

}  // namespace ogq::schubert
