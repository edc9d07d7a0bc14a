#pragma once

#include <cstdint>
#include <vector>

#include "vhess/hessian.hpp"
#include "vhess/poly.hpp"
#include "vhess/subspace.hpp"

namespace vhess {

/// The gradient of f at p as a projective point. Throws DegenerateError when p is singular.
ProjPoint polar_map_eval(const MultiPoly& f, const RVector& p);

struct PolarHypersurface {
  MultiPoly form;         // (sum p_i d/dx_i)^(d-s) f
  bool everything = false;  // the operator killed f: the polar is all of P^N
};

/// Degree-s polar of f with respect to p, 1 <= s <= deg f - 1.
PolarHypersurface polar_hypersurface(const MultiPoly& f, const RVector& p, int s);

/// Kernel of Hess(f)(p). Throws DegenerateError when Hess(f)(p) is the zero matrix.
LinearSubspace polar_quadric_sing(const MultiPoly& f, const RVector& p);

/// Forms g in the dual variables y0..yN with g(df/dx_0, ..., df/dx_N) = 0.
struct RelationBasis {
  int degree = 0;  // 0 when nothing was found
  std::vector<MultiPoly> basis;
  bool minimal = false;
  int searched_up_to = 0;
};

/// Lowest-degree relations among the partials, up to `max_degree`. Each returned form has been
/// verified by exact substitution. The basis is the reduced echelon basis over the graded-lex
/// order of degree-e monomials in y.
RelationBasis find_relations(const MultiPoly& f, int max_degree = 3, const SamplingOptions& opts = {});

/// The Gordan-Noether map built from a relation g: component i is (dg/dy_i)(grad f) with the
/// common monomial factor removed.
struct GNMap {
  std::vector<MultiPoly> components;
  MultiPoly relation;
  Exponents stripped_content;
  bool degenerate = false;  // all components constant (g linear, f a cone)
};

GNMap gn_map_build(const MultiPoly& f, const MultiPoly& g);

struct GNIdentityReport {
  std::size_t trials = 0;
  std::size_t gradient_invariant = 0;  // grad f(x + t psi(x)) == grad f(x)
  std::size_t psi_invariant = 0;       // psi(x + t psi(x)) ~ psi(x)
  bool all_passed() const { return gradient_invariant == trials && psi_invariant == trials; }
};

/// Checks the Gordan-Noether identities at random points of F_p (first prime of `opts`).
GNIdentityReport gn_identity_check(const MultiPoly& f, const GNMap& gn, const SamplingOptions& opts = {});

/// f restricted to the hyperplane h . x = 0, written in the remaining N variables.
struct Restriction {
  MultiPoly form;
  std::size_t eliminated = 0;         // index of the solved-for variable
  std::vector<RVector> chart;         // (N+1) x N matrix: old coordinates from new ones
};

/// Solves h . x = 0 for the last variable with a nonzero coefficient and substitutes.
/// Throws UsageError when the hyperplane is contained in V(f).
Restriction restrict_to_hyperplane(const MultiPoly& f, const RVector& h);

}  // namespace vhess
