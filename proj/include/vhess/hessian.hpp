#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vhess/polymatrix.hpp"
#include "vhess/random.hpp"
#include "vhess/subspace.hpp"

namespace vhess {

enum class Certainty { ExactSymbolic, MonteCarlo };

std::string to_string(Certainty c);

/// Knobs shared by every randomized computation. Per-trial seeds are derived from `seed`.
struct SamplingOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  std::vector<std::uint64_t> primes = {kMersenne61, kMersenne31};
};

/// Evidence for a rank claim. The witness makes the lower bound certain; maximality is only
/// probabilistic unless the rank is full, and `log2_failure_bound` bounds the chance that the
/// true generic rank is larger than claimed.
struct RankCertificate {
  std::size_t claimed_rank = 0;
  std::vector<PrimeField::Elem> witness_point;
  std::uint64_t witness_prime = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> primes_used;
  Certainty certainty = Certainty::MonteCarlo;
  double log2_failure_bound = 0;  // -inf when the claim is certain
  std::uint64_t seed = 0;
};

/// Symmetric matrix of exact second partials.
PolyMatrix hessian_matrix(const MultiPoly& f);

enum class HessMode { Symbolic, MonteCarlo };

struct HessVanishing {
  bool vanishes = false;
  Certainty certainty = Certainty::ExactSymbolic;
  double log2_failure_bound = 0;
  MultiPoly determinant;  // only filled in symbolic mode
  RankCertificate rank;
};

/// Whether det Hess(f) is identically zero. Symbolic mode expands the determinant exactly;
/// Monte-Carlo mode evaluates it at `trials` random points per prime.
HessVanishing hess_vanishes(const MultiPoly& f, HessMode mode, const SamplingOptions& opts = {});

/// Maximum rank of the matrix over random evaluations, with its witness.
RankCertificate generic_rank(const PolyMatrix& m, const SamplingOptions& opts = {});

/// Directions v with sum v_i df/dx_i = 0 identically; empty exactly when V(f) is not a cone.
LinearSubspace vertex_space(const MultiPoly& f);

/// The (N+1) x (#monomials) coefficient matrix of the first partials.
Matrix<Rational> partials_coefficient_matrix(const MultiPoly& f);

/// A point of V(f) over F_p obtained as a root of f on a random line.
std::vector<PrimeField::Elem> sample_point_on(const MultiPoly& f, const PrimeField& field, std::uint64_t seed,
                                              std::size_t max_lines = 64);

/// Maximum rank of Hess(p) over sampled smooth points p of V(f) (at least 16 per prime).
/// dim X* = rank - 2.
RankCertificate rank_mod_f(const MultiPoly& f, const SamplingOptions& opts = {});

}  // namespace vhess
