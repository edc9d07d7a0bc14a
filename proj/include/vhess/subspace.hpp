#pragma once

#include <string>
#include <vector>

#include "vhess/field.hpp"
#include "vhess/linalg.hpp"

namespace vhess {

using RVector = std::vector<Rational>;

/// Scales a nonzero vector to primitive integers whose first nonzero entry is positive.
RVector primitive_vector(RVector v);

/// A point of P^N with rational homogeneous coordinates, stored in primitive form so that
/// equality is equality up to a nonzero scalar.
class ProjPoint {
 public:
  explicit ProjPoint(RVector coords);

  const RVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  RVector coords_;
};

/// Projective linear subspace of P^N spanned by homogeneous representatives.
///
/// The basis is kept in reduced row echelon form with each row rescaled to primitive integers
/// (leading entry positive), so equal subspaces have identical bases.
class LinearSubspace {
 public:
  explicit LinearSubspace(std::size_t ambient) : ambient_(ambient) {}

  static LinearSubspace span(std::size_t ambient, const std::vector<RVector>& vectors);
  /// The common zero set of the given linear forms (coefficient vectors).
  static LinearSubspace from_equations(std::size_t ambient, const std::vector<RVector>& forms);
  /// V(x_i : i in indices).
  static LinearSubspace coordinate(std::size_t ambient, const std::vector<std::size_t>& vanishing);
  static LinearSubspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  const std::vector<RVector>& basis() const { return basis_; }
  /// Number of basis vectors (affine dimension).
  std::size_t size() const { return basis_.size(); }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  bool empty() const { return basis_.empty(); }
  /// Pivot column of each basis row; these coordinates parametrize the subspace.
  std::vector<std::size_t> pivot_columns() const;

  bool contains(const RVector& v) const;
  bool contains(const LinearSubspace& other) const;
  LinearSubspace intersect(const LinearSubspace& other) const;
  LinearSubspace join(const LinearSubspace& other) const;
  /// Canonical basis of the linear forms vanishing on the subspace.
  std::vector<RVector> equations() const;
  /// Linear combination of the basis vectors.
  RVector combine(const RVector& coeffs) const;

  /// "V(x3, x4)" style description; "P^N" for the whole space, "{}" for the empty one.
  std::string to_string() const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<RVector> basis_;
};

/// "2*x0 - x3" style rendering of a linear form.
std::string linear_form_to_string(const RVector& form);

struct RankKernel {
  std::size_t rank;
  LinearSubspace kernel;
};

/// Exact rank and canonical kernel of a rational matrix.
RankKernel rank_kernel(const Matrix<Rational>& m);

}  // namespace vhess
