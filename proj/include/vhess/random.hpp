#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vhess/field.hpp"

namespace vhess {

/// Deterministic per-trial seed from (seed, stream, index) via splitmix64 mixing, so that
/// results never depend on the order in which trials are scheduled.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform element of F_p \ {0}.
  PrimeField::Elem nonzero(const PrimeField& f) {
    return std::uniform_int_distribution<std::uint64_t>(1, f.modulus() - 1)(engine_);
  }
  PrimeField::Elem element(const PrimeField& f) {
    return std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(engine_);
  }
  std::vector<PrimeField::Elem> nonzero_point(const PrimeField& f, std::size_t n) {
    std::vector<PrimeField::Elem> v(n);
    for (auto& x : v) x = nonzero(f);
    return v;
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  /// Nonzero integer in [-bound, bound].
  std::int64_t nonzero_integer(std::int64_t bound) {
    std::int64_t v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }
  /// Rational point with integer coordinates in [-bound, bound], all nonzero.
  std::vector<Rational> rational_point(std::size_t n, std::int64_t bound = 10000) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(static_cast<long>(nonzero_integer(bound)));
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vhess
