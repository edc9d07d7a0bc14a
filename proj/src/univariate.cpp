#include "vhess/univariate.hpp"

#include <algorithm>

namespace vhess {

UniPoly::UniPoly(const PrimeField& field, std::vector<PrimeField::Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PrimeField::Elem UniPoly::operator()(PrimeField::Elem t) const {
  PrimeField::Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<PrimeField::Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<PrimeField::Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_, {});
  std::vector<PrimeField::Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  return UniPoly(field_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw UsageError("division by the zero polynomial");
  std::vector<PrimeField::Elem> rem = c_;
  if (rem.size() < d.c_.size()) return {UniPoly(field_, {}), *this};
  std::vector<PrimeField::Elem> q(rem.size() - d.c_.size() + 1, 0);
  const auto lead_inv = field_.inv(d.c_.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    auto coef = field_.mul(rem[k + d.c_.size() - 1], lead_inv);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = field_.sub(rem[k + j], field_.mul(coef, d.c_[j]));
  }
  return {UniPoly(field_, std::move(q)), UniPoly(field_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  auto inv = field_.inv(c_.back());
  std::vector<PrimeField::Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], inv);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::powmod(UniPoly base, std::uint64_t e, const UniPoly& mod) {
  UniPoly result(mod.field_, {1});
  result = result % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = (result * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return result;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::interpolate(const PrimeField& field, const std::vector<PrimeField::Elem>& xs,
                             const std::vector<PrimeField::Elem>& ys) {
  UniPoly acc(field, {});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(field, {1});
    PrimeField::Elem denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly(field, {field.neg(xs[j]), 1});
      denom = field.mul(denom, field.sub(xs[i], xs[j]));
    }
    auto scale = field.mul(ys[i], field.inv(denom));
    std::vector<PrimeField::Elem> c = basis.coeffs();
    for (auto& x : c) x = field.mul(x, scale);
    acc = acc + UniPoly(field, std::move(c));
  }
  return acc;
}

std::optional<PrimeField::Elem> find_root(const UniPoly& g, Rng& rng) {
  if (g.is_zero()) throw UsageError("find_root of the zero polynomial");
  const PrimeField& f = g.field();
  const auto p = f.modulus();
  UniPoly t(f, {0, 1});
  UniPoly split = UniPoly::gcd(g, UniPoly::powmod(t, p, g) - t);
  if (split.degree() < 1) return std::nullopt;
  // split is a product of distinct linear factors; peel them apart.
  for (int attempt = 0; split.degree() > 1 && attempt < 200; ++attempt) {
    UniPoly shifted(f, {rng.element(f), 1});
    UniPoly h = UniPoly::powmod(shifted, (p - 1) / 2, split) - UniPoly(f, {1});
    UniPoly d = UniPoly::gcd(split, h);
    if (d.degree() >= 1 && d.degree() < split.degree()) split = d.degree() <= split.degree() / 2 ? d : split.divmod(d).first.monic();
  }
  if (split.degree() != 1) return std::nullopt;
  return f.neg(split.coeffs()[0]);
}

}  // namespace vhess
