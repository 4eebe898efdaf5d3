#pragma once

#include <cstddef>
#include <vector>

#include "ogq/rational.hpp"

namespace ogq {

/// Dense row-major matrix over Rat.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RowEchelon {
  RatMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Within a column the pivot is the nonzero entry
/// of least height, ties broken by row index, so results are deterministic.
RowEchelon row_reduce(RatMatrix m);

/// Basis of the right null space, one vector per free column, in the
/// standard form read off the reduced echelon matrix.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Solves a square nonsingular system. Throws SingularSystem otherwise.
std::vector<Rat> solve_square(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace ogq
