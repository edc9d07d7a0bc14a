#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "vhess/errors.hpp"

namespace vhess {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

bool is_prime_u64(std::uint64_t n);

/// Exact arithmetic over Q. GMP arithmetic returns values in lowest terms; MultiPoly also reduces
/// coefficients built directly from a numerator and denominator.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const Rational& q) const { return q; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw UsageError("inverse of zero");
    return Elem(1) / a;
  }
  std::string name() const { return "Q"; }
};

/// Integers modulo a word-sized prime p < 2^63.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kMersenne61);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    auto r = static_cast<std::int64_t>(static_cast<__int128>(v) % static_cast<__int128>(p_));
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Elem from_integer(const Integer& z) const;
  /// Throws ReductionError when the denominator is divisible by p.
  Elem from_rational(const Rational& q) const;
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Runtime tag naming the coefficient field used by an operation; recorded in reports.
struct CoeffField {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t prime = 0;

  static CoeffField rationals() { return {}; }
  static CoeffField prime_field(std::uint64_t p) { return {Kind::Prime, p}; }
  std::string name() const { return kind == Kind::Rationals ? "Q" : "F_" + std::to_string(prime); }
};

}  // namespace vhess
