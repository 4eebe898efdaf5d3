#include "ogq/linalg.hpp"

#include <optional>
#include <utility>

#include "ogq/error.hpp"

namespace ogq {

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

RowEchelon row_reduce(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (!best || m(r, col).height() < m(*best, col).height()) best = r;
    }
    if (!best) continue;
    m.swap_rows(row, *best);
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols());
    v[free] = Rat(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> solve_square(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_square expects a square system");
  if (n == 0) return {};
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.rank() != n || e.pivots.back() != n - 1)
    throw SingularSystem("singular " + std::to_string(n) + "x" + std::to_string(n) + " system");
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

}  // namespace ogq
