#pragma once

#include <array>
#include <string>
#include <vector>

#include "ogq/linalg.hpp"
#include "ogq/polynomial.hpp"
#include "ogq/rational.hpp"

namespace ogq::defcheck {

/// Variable layout of fixture polynomials: t, u, x0, x1, x2, x3.
inline constexpr int kVars = 6;
inline constexpr int kPoints = 7;
inline constexpr int kCoords = 4;
/// s1..s7 then g10..g13, g20..g23.
inline constexpr int kUnknowns = kPoints + 2 * kCoords;

struct DeformationFixture {
  std::vector<Rat> points;        // first coordinates r_j of [r_j, 1]
  std::array<Poly, kCoords> iota{Poly(2), Poly(2), Poly(2), Poly(2)};  // sextics in (t, u)
  Poly L{kVars};   // bidegree (1,1) in (t,u ; x)
  Poly F1{kVars};  // bidegree (1,2)
  Poly F2{kVars};
  RatMatrix D;     // 4 x 7, column j is a multiple of iota(r_j, 1)
};

/// Parses polynomial text over t, u, x0..x3 with + - * ^, parentheses and
/// rational literals such as 35/32. ParseError on bad input.
Poly parse_polynomial(const std::string& text);

/// Reads the `key = value` fixture format (see data/fixtures/genus7.txt).
/// Lines starting with whitespace continue the previous value; `#` starts a
/// comment. Does not validate; ParseError on syntax problems.
DeformationFixture parse_fixture(const std::string& text);
DeformationFixture load_fixture(const std::string& path);

/// Throws FixtureError naming the first violated invariant: distinct points,
/// sextic components, bidegrees, F1 and F2 vanishing on the curve, L vanishing
/// at each (r_j, d_j), columns of D proportional to iota(r_j).
void validate(const DeformationFixture& fix);

/// Column scalars c_j with D column j = c_j * iota(r_j, 1).
std::vector<Rat> column_scalars(const DeformationFixture& fix);

/// Sextics P_i in (t,u) with P_i(r_j, 1) = delta_ij. DomainError on
/// coincident points.
std::vector<Poly> dual_sextic_basis(const std::vector<Rat>& points);

/// Value plus first-order part, linear in the unknowns: slope[k] is the
/// coefficient form of unknown k.
struct FirstOrder {
  Poly value{2};
  std::vector<Poly> slope;
};

struct LinearSystem {
  /// 14 x 15: rows are the coefficients of t^i u^(6-i) (i = 0..6) of the
  /// two quotient forms, columns the unknowns.
  RatMatrix matrix;
  /// The two epsilon-linear forms of degree 13 before division, one column
  /// per unknown.
  std::array<std::vector<Poly>, 2> forms;
};

/// Builds the first-order system at the base point iota. Throws
/// IndivisibleError when an epsilon-linear form is not a multiple of
/// prod (t - r_j u).
LinearSystem first_order_system(const DeformationFixture& fix);

struct Verdict {
  bool unramified = false;
  std::size_t rank = 0;
  std::vector<std::vector<Rat>> kernel;  // basis, length-15 vectors
  bool trivial_in_kernel = false;
};

/// Exact elimination of the first-order system. UNRAMIFIED iff the kernel is
/// spanned by the trivial direction s_j = 1/c_j, g = 0.
Verdict check_unramified(const DeformationFixture& fix);

/// "s1".."s7", "g10".."g23".
const std::vector<std::string>& unknown_names();

}  // namespace ogq::defcheck
