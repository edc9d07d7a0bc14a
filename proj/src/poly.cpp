#include "vhess/poly.hpp"

#include <algorithm>
#include <numeric>

#include "vhess/linalg.hpp"

namespace vhess {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  // Lexicographically largest first: fill from x0 downwards.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      cur[i] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (int k = static_cast<int>(left); k >= 0; --k) {
      cur[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - static_cast<unsigned>(k));
    }
    cur[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

const std::pair<const Exponents, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return *terms_.begin();
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::uses_variable(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw UsageError("exponent vector length does not match the ring");
  if (sgn(c) == 0) return;
  // GMP only keeps results of arithmetic in lowest terms; a directly constructed n/d may not be.
  Rational reduced = c;
  reduced.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, std::move(reduced));
  if (!inserted) {
    it->second += c;
    it->second.canonicalize();
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw UsageError("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                     std::to_string(o.nvars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.nvars_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::differentiate(std::size_t i) const {
  if (i >= nvars_) throw UsageError("differentiation variable out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<Rational>>& t) const {
  if (t.size() != nvars_) throw UsageError("transformation size does not match the ring");
  for (const auto& row : t) {
    if (row.size() != nvars_) throw UsageError("transformation must be square");
  }
  Matrix<Rational> m(nvars_, nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (std::size_t j = 0; j < nvars_; ++j) m(i, j) = t[i][j];
  }
  if (rank(RationalField{}, m) != nvars_) throw UsageError("linear substitution is singular");
  std::vector<MultiPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    MultiPoly li(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) li += variable(nvars_, j).scaled(t[i][j]);
    images.push_back(std::move(li));
  }
  return compose(images);
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw UsageError("compose needs one image per variable");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& g : images) {
    if (g.nvars() != target) throw UsageError("composition images live in different rings");
  }
  // Cache powers so that repeated exponents are multiplied once.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::relabel(const std::vector<std::size_t>& map, std::size_t new_nvars) const {
  if (map.size() != nvars_) throw UsageError("relabel map must cover every variable");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (map[i] >= new_nvars) throw UsageError("relabel target out of range");
      ne[map[i]] = static_cast<std::uint16_t>(ne[map[i]] + e[i]);
    }
    out.add_term(ne, c);
  }
  return out;
}

Exponents MultiPoly::monomial_content() const {
  Exponents g(nvars_, 0);
  if (terms_.empty()) return g;
  g = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], e[i]);
  }
  return g;
}

MultiPoly MultiPoly::divide_by_monomial(const Exponents& m) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (d[i] < m[i]) throw UsageError("monomial does not divide the polynomial");
      d[i] = static_cast<std::uint16_t>(d[i] - m[i]);
    }
    out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& d) const {
  check_ring(d);
  if (d.is_zero()) throw UsageError("division by the zero polynomial");
  MultiPoly quotient(nvars_);
  MultiPoly rem = *this;
  const auto& [de, dc] = d.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    Exponents qe(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = static_cast<std::uint16_t>(re[i] - de[i]);
    }
    MultiPoly step = monomial(qe, rc / dc);
    quotient += step;
    rem -= step * d;
  }
  return quotient;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(leading_term().second) < 0) factor = -factor;
  return scaled(factor);
}

CompiledPoly::CompiledPoly(const MultiPoly& f, const PrimeField& field) : field_(field) {
  for (const auto& [e, c] : f.terms()) {
    auto v = field.from_rational(c);
    if (v == 0) continue;
    coeffs_.push_back(v);
    offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) factors_.push_back({static_cast<std::uint32_t>(i), e[i]});
    }
  }
  offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
}

PrimeField::Elem CompiledPoly::operator()(std::span<const PrimeField::Elem> point) const {
  PrimeField::Elem acc = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    PrimeField::Elem term = coeffs_[t];
    for (auto k = offsets_[t]; k < offsets_[t + 1]; ++k) {
      const auto& fac = factors_[k];
      for (std::uint32_t r = 0; r < fac.exp; ++r) term = field_.mul(term, point[fac.var]);
    }
    acc = field_.add(acc, term);
  }
  return acc;
}

}  // namespace vhess
