#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ogq/rational.hpp"

namespace ogq {

inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in at most kMaxVars variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order; the leading term is the largest key.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms with zero coefficient are never stored, so two polynomials over the
/// same variables are equal exactly when their term maps are equal.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat, GradedLex>;

  explicit Poly(int nvars);
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int index, const Rat& coeff = Rat(1));
  static Poly monomial(int nvars, const Monomial& m, const Rat& coeff);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  /// Adds `c * m`, pruning the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Applies `fn` to every exponent vector, mapping the coefficient by the
  /// returned factor. Used for variable permutations and sign flips.
  Poly map_monomials(const std::function<std::pair<Monomial, Rat>(const Monomial&)>& fn) const;

  std::string str(std::span<const std::string> names = {}) const;

 private:
  void check_same(const Poly& o) const;

  int nvars_;
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Composition: every variable i is replaced by images[i]. All images must
/// share one variable count, which becomes the variable count of the result.
Poly substitute(const Poly& f, std::span<const Poly> images);

/// Returns q with q * divisor == dividend. Leading-term elimination under
/// graded lex; throws IndivisibleError on a nonzero remainder.
Poly exact_div(const Poly& dividend, const Poly& divisor);

/// Evaluates all variables at the given point.
Rat evaluate(const Poly& f, std::span<const Rat> point);

/// True when every stored coefficient is in lowest terms.
bool coefficients_canonical(const Poly& f);

}  // namespace ogq
