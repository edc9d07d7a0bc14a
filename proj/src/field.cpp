#include "vhess/field.hpp"

namespace vhess {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not an odd prime below 2^63");
  }
}

PrimeField::Elem PrimeField::from_integer(const Integer& z) const {
  Integer r = z % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const {
  Elem den = from_integer(q.get_den());
  if (den == 0) {
    throw ReductionError("denominator " + q.get_den().get_str() + " is divisible by " + std::to_string(p_));
  }
  return mul(from_integer(q.get_num()), inv(den));
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw UsageError("inverse of zero in " + name());
  return powmod(a, p_ - 2, p_);
}

}  // namespace vhess
