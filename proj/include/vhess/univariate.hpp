#pragma once

#include <optional>
#include <vector>

#include "vhess/field.hpp"
#include "vhess/random.hpp"

namespace vhess {

/// Dense univariate polynomial over F_p, coefficients from degree 0 upwards, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const PrimeField& field, std::vector<PrimeField::Elem> coeffs);

  const PrimeField& field() const { return field_; }
  const std::vector<PrimeField::Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  PrimeField::Elem operator()(PrimeField::Elem t) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly monic() const;

  /// base^e reduced modulo `mod`.
  static UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& mod);
  static UniPoly gcd(UniPoly a, UniPoly b);
  /// Interpolates the polynomial of degree < n taking values ys at xs (distinct).
  static UniPoly interpolate(const PrimeField& field, const std::vector<PrimeField::Elem>& xs,
                             const std::vector<PrimeField::Elem>& ys);

 private:
  void trim();

  PrimeField field_{};
  std::vector<PrimeField::Elem> c_;
};

/// Some root of g in F_p, found by splitting gcd(T^p - T, g) with random shifts; nullopt if g
/// has no root in the field. g must be nonzero.
std::optional<PrimeField::Elem> find_root(const UniPoly& g, Rng& rng);

}  // namespace vhess
