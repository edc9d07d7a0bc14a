#include "vhess/polymatrix.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace vhess {

void PolyMatrix::set(std::size_t i, std::size_t j, MultiPoly p) {
  if (p.nvars() != nvars_) throw UsageError("matrix entry lives in a different ring");
  if (i >= rows() || j >= cols()) throw UsageError("matrix index out of range");
  entries_(i, j) = std::move(p);
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = i + 1; j < cols(); ++j)
      if (!(entries_(i, j) == entries_(j, i))) return false;
  return true;
}

bool PolyMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (!entries_(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols(); ++j)
      if (!(entries_(i, j) == -entries_(j, i))) return false;
  }
  return true;
}

std::size_t PolyMatrix::zero_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) n += entries_(i, j).is_zero() ? 1 : 0;
  return n;
}

CompiledPolyMatrix::CompiledPolyMatrix(const PolyMatrix& m, const PrimeField& field)
    : field_(field), rows_(m.rows()), cols_(m.cols()) {
  entries_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) entries_.emplace_back(m(i, j), field);
}

Matrix<PrimeField::Elem> CompiledPolyMatrix::operator()(std::span<const PrimeField::Elem> point) const {
  Matrix<PrimeField::Elem> out(rows_, cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = entries_[i * cols_ + j];
      if (!e.is_zero()) out(i, j) = e(point);
    }
  return out;
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  Matrix<MultiPoly> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  MultiPoly prev = MultiPoly::constant(m.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return MultiPoly(m.nvars());
      a.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = num.exact_divide(prev);
        if (!q) throw Error("Bareiss step produced an inexact division");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MultiPoly(m.nvars());
    }
    prev = a(k, k);
  }
  MultiPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 63) throw UsageError("cofactor expansion supports at most 63 rows");
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  // Minor on the last |S| rows restricted to the column set S, memoized by S.
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  auto minor = [&](auto&& self, std::uint64_t cols) -> MultiPoly {
    const auto size = static_cast<std::size_t>(std::popcount(cols));
    if (size == 0) return MultiPoly::constant(m.nvars(), 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - size;
    MultiPoly acc(m.nvars());
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols >> c & 1)) continue;
      const MultiPoly& entry = m(row, c);
      if (!entry.is_zero()) {
        MultiPoly sub = self(self, cols & ~(std::uint64_t{1} << c));
        if (!sub.is_zero()) {
          MultiPoly term = entry * sub;
          if (position % 2) acc -= term;
          else acc += term;
        }
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(minor, (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
}

std::size_t structural_rank(const PolyMatrix& m) {
  // Kuhn's augmenting paths on the bipartite graph of nonzero entries.
  std::vector<int> match_col(m.cols(), -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || seen[j]) continue;
      seen[j] = 1;
      if (match_col[j] < 0 || augment(static_cast<std::size_t>(match_col[j]), seen)) {
        match_col[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<char> seen(m.cols(), 0);
    if (augment(i, seen)) ++r;
  }
  return r;
}

MultiPoly det_symbolic(const PolyMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (structural_rank(m) < n) return MultiPoly(m.nvars());
  if (2 * m.zero_count() >= n * n || n > 10) {
    return det_cofactor(m);
  }
  return det_bareiss(m);
}

MultiPoly pfaffian(const PolyMatrix& m) {
  if (!m.is_square() || m.rows() % 2) throw UsageError("Pfaffian needs a square matrix of even size");
  if (!m.is_skew_symmetric()) throw UsageError("Pfaffian needs a skew-symmetric matrix");
  const std::size_t n = m.rows();
  if (n > 63) throw UsageError("Pfaffian expansion supports at most 63 rows");
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  auto pf = [&](auto&& self, std::uint64_t idx) -> MultiPoly {
    if (idx == 0) return MultiPoly::constant(m.nvars(), 1);
    if (auto it = memo.find(idx); it != memo.end()) return it->second;
    const auto first = static_cast<std::size_t>(std::countr_zero(idx));
    const std::uint64_t rest = idx & ~(std::uint64_t{1} << first);
    MultiPoly acc(m.nvars());
    std::size_t position = 0;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (!(rest >> j & 1)) continue;
      ++position;
      const MultiPoly& entry = m(first, j);
      if (entry.is_zero()) continue;
      MultiPoly term = entry * self(self, rest & ~(std::uint64_t{1} << j));
      if (position % 2) acc += term;
      else acc -= term;
    }
    memo.emplace(idx, acc);
    return acc;
  };
  return pf(pf, (std::uint64_t{1} << n) - 1);
}

}  // namespace vhess
