#pragma once

#include <vector>

#include "vhess/linalg.hpp"
#include "vhess/poly.hpp"

namespace vhess {

/// Matrix whose entries are polynomials in one common ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : nvars_(nvars), entries_(rows, cols, MultiPoly(nvars)) {}

  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  std::size_t nvars() const { return nvars_; }

  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  /// Replaces one entry; the entry must live in the matrix's ring.
  void set(std::size_t i, std::size_t j, MultiPoly p);

  bool is_square() const { return rows() == cols(); }
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  std::size_t zero_count() const;

  template <class F>
  Matrix<typename F::Elem> evaluate(const F& field, std::span<const typename F::Elem> point) const {
    Matrix<typename F::Elem> out(rows(), cols(), field.zero());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) out(i, j) = entries_(i, j).evaluate(field, point);
    return out;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.nvars_ == b.nvars_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t nvars_ = 0;
  Matrix<MultiPoly> entries_;
};

/// PolyMatrix with every entry reduced modulo one prime, for repeated evaluation.
class CompiledPolyMatrix {
 public:
  CompiledPolyMatrix(const PolyMatrix& m, const PrimeField& field);

  const PrimeField& field() const { return field_; }
  Matrix<PrimeField::Elem> operator()(std::span<const PrimeField::Elem> point) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CompiledPoly> entries_;
};

/// Size of a maximum matching between rows and columns through nonzero entries; an upper
/// bound for the rank that is attained for generic entries.
std::size_t structural_rank(const PolyMatrix& m);

/// Exact determinant. Structurally singular matrices return zero at once; otherwise memoized
/// cofactor expansion when at least half of the entries are zero (or n > 10), and
/// fraction-free (Bareiss) elimination when the matrix is small and dense.
MultiPoly det_symbolic(const PolyMatrix& m);
MultiPoly det_bareiss(const PolyMatrix& m);
MultiPoly det_cofactor(const PolyMatrix& m);

/// Pfaffian of a skew-symmetric matrix of even size, by expansion along the first row.
MultiPoly pfaffian(const PolyMatrix& m);

}  // namespace vhess
