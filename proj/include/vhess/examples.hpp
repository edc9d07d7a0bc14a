#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vhess/poly.hpp"
#include "vhess/polymatrix.hpp"
#include "vhess/subspace.hpp"

namespace vhess {

/// Family name plus parameters for `generate`.
///
///   bs            x0*x3^2 + x1*x3*x4 + x2*x4^2
///   singp2        x0*x3^2 + x1*x4^2 + x2*x5^2
///   exdet         x0*x4*x5 + x1*x4^2 + x2*x4*x6 + x3*x5*x6
///   concat        bs glued to a copy of itself along x2*x4^2, in P^7
///   juxtapose     `copies` disjoint copies of bs (default 2)
///   det3          generic 3x3 determinant in x0..x8
///   det3_section  det3 with x8 = 0
///   pf6           Pfaffian of the generic 6x6 skew matrix in x0..x14
///   pf6_section   pf6 with x14 = 0 (tangent section at m01 = m23 = 1)
///   classe1       sum_{i<=tau} x_i C^i(x_{tau+1..N}) + D(x_{tau+1..N})
///   simplified    sum_{i<=tau} x_i C^i(x_{N-tau+1..N}) + D(x_{tau+1..N})
///   canSPCH       same shape with sigma in place of tau
///   mu1           x0*x_{N-1}^2 + 2*x1*x_{N-1}*x_N + x2*x_N^2 + D(x3..xN)
///
/// Random coefficients are drawn from [-9, 9] \ {0} with `seed`; `coefficients`, when given,
/// replaces the random stream (consumed in order, cycling).
struct FamilySpec {
  std::string family;
  std::size_t N = 0;
  std::size_t tau = 0;  // tau for classe1/simplified, sigma for canSPCH
  std::size_t copies = 2;
  std::uint64_t seed = 0;
  std::optional<std::vector<std::int64_t>> coefficients;
  bool zero_D = false;  // omit D in the random families
};

std::vector<std::string> family_names();

MultiPoly generate(const FamilySpec& spec);

/// f + g with g moved onto fresh variables after f's.
MultiPoly juxtapose(const MultiPoly& f, const MultiPoly& g);

/// Union of the terms of f and of f relabelled by `map` (variable i -> map[i]); shared monomials
/// are kept once and must carry equal coefficients.
MultiPoly concatenate(const MultiPoly& f, const std::vector<std::size_t>& map, std::size_t nvars);
/// Same with the map i -> i + shift.
MultiPoly concatenate(const MultiPoly& f, std::size_t shift);

/// R cut by its tangent hyperplane at p, written in the remaining N variables.
MultiPoly tangent_section(const MultiPoly& r, const RVector& p);

/// The generic 6x6 skew matrix with m_ij (i < j, lexicographic) = x0..x14.
PolyMatrix generic_skew6();

/// The fixed rank-4 skew point m01 = m23 = 1 used for the Pfaffian tangent section.
RVector pf6_rank4_point();

}  // namespace vhess
