#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vhess/hessian.hpp"
#include "vhess/polymatrix.hpp"
#include "vhess/subspace.hpp"

namespace vhess {

/// Sing Q_p, the kernel of Hess(f)(p). f must be a cubic.
LinearSubspace perazzo_image(const MultiPoly& f, const RVector& p);

/// The joint kernel of Hess(f)(r) over a basis r of Sing Q_p: the linear fiber through p.
LinearSubspace perazzo_fiber(const MultiPoly& f, const RVector& p);

/// Random integer point (coordinates in [-10^4, 10^4] \ {0}) where Hess(f) attains rank
/// `generic_rank`. Throws GenericityError after 32 rejected draws.
RVector generic_point(const MultiPoly& f, std::size_t generic_rank, std::uint64_t seed);

struct PerazzoRank {
  int mu = -1;
  int fiber_dim = -1;
  std::vector<int> fiber_dims;  // one per seed
};

/// mu = N - dim(general fiber); the fiber dimension must agree on at least 5 of 6 seeds.
PerazzoRank perazzo_rank(const MultiPoly& f, const SamplingOptions& opts = {});

struct SpecialVerdict {
  bool special = false;
  std::optional<LinearSubspace> L;
  std::vector<int> pairwise_dims;  // dimensions of the pairwise fiber intersections
  bool intersections_vary = false;
  bool zstar_in_L = false;         // only meaningful when special
  bool consistent = true;          // false when the two criteria disagree
};

/// Intersects four general fibers pairwise. Special when every intersection is one and the same
/// P^(N - mu - 1); that space is then checked to contain sampled points of Z*.
SpecialVerdict is_special_perazzo(const MultiPoly& f, int mu, const SamplingOptions& opts = {});

struct ZStarAnalysis {
  LinearSubspace span{0};
  std::optional<MultiPoly> fit;  // in the pivot variables of `span`, primitive
  int fit_degree = 0;
  std::size_t fit_count = 0;     // dimension of the space of fitting forms of that degree
  int dim = -1;
  std::vector<RVector> samples;
};

/// Samples Z* as the union of the spaces Sing Q_p, fits the lowest degree form (<= 4) on the span
/// of the samples (confirmed on held-out samples) and computes dim Z* as the rank of the
/// differential of p -> Sing Q_p at a general point.
ZStarAnalysis zstar_analyze(const MultiPoly& f, std::size_t samples = 24, const SamplingOptions& opts = {});

/// True when f = sum_{i<=sigma} x_i C^i(x_{N-sigma+1..N}) + D(x_{sigma+1..N}) term by term.
bool is_canonical_special_form(const MultiPoly& f, std::size_t sigma);

struct PerazzoMatrix {
  PolyMatrix A;
  MultiPoly det;
};

/// A[k][i] = sum_j (d^2 C^j / dx_k dx_i) x_j for k, i in {N-sigma+1, ..., N}.
/// Throws NotCanonicalFormError when f does not have the canonical special shape.
PerazzoMatrix perazzo_matrix_A(const MultiPoly& f, std::size_t sigma);

/// The invariants of a vanishing-hessian cubic that is not a cone.
struct PerazzoProfile {
  int N = 0;
  int codimZ = 0;
  int mu = -1;
  int fiber_dim = -1;
  std::vector<int> fiber_dims;
  SpecialVerdict special;
  ZStarAnalysis zstar;
  std::uint64_t seed = 0;
};

PerazzoProfile perazzo_profile(const MultiPoly& f, std::size_t generic_rank, const SamplingOptions& opts = {});

}  // namespace vhess
