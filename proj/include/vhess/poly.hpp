#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vhess/field.hpp"

namespace vhess {

using Exponents = std::vector<std::uint16_t>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order, largest monomial first (x0 > x1 > ... within a degree).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables, largest first.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in graded-lex order and never carry a zero coefficient, so two
/// polynomials are equal exactly when their term maps are equal.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// The largest term in graded-lex order. Requires a nonzero polynomial.
  const std::pair<const Exponents, Rational>& leading_term() const;
  Rational coefficient(const Exponents& e) const;
  /// True when variable `i` occurs in some term.
  bool uses_variable(std::size_t i) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned k) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly differentiate(std::size_t i) const;

  template <class F>
  typename F::Elem evaluate(const F& field, std::span<const typename F::Elem> point) const;

  /// Substitutes x -> T x (so the result is x |-> f(T x)). T must be invertible.
  MultiPoly substitute_linear(const std::vector<std::vector<Rational>>& t) const;
  /// Substitutes variable i by images[i]; all images must share one ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Moves variable i to index map[i] in a ring with `new_nvars` variables.
  MultiPoly relabel(const std::vector<std::size_t>& map, std::size_t new_nvars) const;

  /// Greatest monomial dividing every term.
  Exponents monomial_content() const;
  MultiPoly divide_by_monomial(const Exponents& m) const;
  /// Exact quotient when `d` divides *this, std::nullopt otherwise.
  std::optional<MultiPoly> exact_divide(const MultiPoly& d) const;

  /// Primitive integer multiple with positive leading coefficient (zero stays zero).
  MultiPoly primitive() const;

 private:
  void check_ring(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Coefficients reduced modulo a prime and exponents flattened, for fast repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const MultiPoly& f, const PrimeField& field);

  PrimeField::Elem operator()(std::span<const PrimeField::Elem> point) const;
  bool is_zero() const { return coeffs_.empty(); }

 private:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
  };
  PrimeField field_{};
  std::vector<PrimeField::Elem> coeffs_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Factor> factors_;
};

template <class F>
typename F::Elem MultiPoly::evaluate(const F& field, std::span<const typename F::Elem> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has wrong length");
  auto acc = field.zero();
  for (const auto& [e, c] : terms_) {
    auto term = field.from_rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = field.mul(term, point[i]);
    }
    acc = field.add(acc, term);
  }
  return acc;
}

}  // namespace vhess
