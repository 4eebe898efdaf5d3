#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ogq {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. There is deliberately no conversion from or to floating
/// point types.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::floating_point F>
  Rat(F) = delete;

  explicit Rat(const mpz_class& n) : v_(n) {}
  /// Throws DomainError when `den` is zero.
  Rat(const mpz_class& num, const mpz_class& den);

  /// Accepts "17", "-3", "35/32", "+1/2". Anything else (including decimal
  /// points and exponents) is a ParseError.
  static Rat parse(std::string_view text);

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  /// Throws DomainError on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  /// Bit size of numerator plus denominator; pivot selection key.
  std::size_t height() const;

  /// Lowest terms with positive denominator.
  bool is_canonical() const;

  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Integer power for integral exponents >= 0.
Rat pow(const Rat& base, unsigned exponent);

}  // namespace ogq
