#include "vhess/subspace.hpp"

#include <sstream>

namespace vhess {

RVector primitive_vector(RVector v) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  int lead_sign = 0;
  for (const auto& c : v) {
    if (sgn(c) == 0) continue;
    if (lead_sign == 0) lead_sign = sgn(c);
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (lead_sign == 0) throw DegenerateError("zero vector has no projective class");
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (lead_sign < 0) factor = -factor;
  for (auto& c : v) c *= factor;
  return v;
}

ProjPoint::ProjPoint(RVector coords) : coords_(primitive_vector(std::move(coords))) {}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i].get_str();
  os << ')';
  return os.str();
}

LinearSubspace LinearSubspace::span(std::size_t ambient, const std::vector<RVector>& vectors) {
  LinearSubspace s(ambient);
  if (vectors.empty()) return s;
  auto ech = row_reduce(RationalField{}, Matrix<Rational>::from_rows(vectors, ambient));
  for (std::size_t k = 0; k < ech.rank(); ++k) s.basis_.push_back(primitive_vector(ech.rref.row(k)));
  return s;
}

LinearSubspace LinearSubspace::from_equations(std::size_t ambient, const std::vector<RVector>& forms) {
  if (forms.empty()) return whole(ambient);
  return span(ambient, kernel_basis(RationalField{}, Matrix<Rational>::from_rows(forms, ambient)));
}

LinearSubspace LinearSubspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& vanishing) {
  std::vector<RVector> forms;
  for (auto i : vanishing) {
    RVector e(ambient, 0);
    e.at(i) = 1;
    forms.push_back(std::move(e));
  }
  return from_equations(ambient, forms);
}

LinearSubspace LinearSubspace::whole(std::size_t ambient) {
  std::vector<RVector> id;
  for (std::size_t i = 0; i < ambient; ++i) {
    RVector e(ambient, 0);
    e[i] = 1;
    id.push_back(std::move(e));
  }
  return span(ambient, id);
}

std::vector<std::size_t> LinearSubspace::pivot_columns() const {
  std::vector<std::size_t> piv;
  for (const auto& row : basis_) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

bool LinearSubspace::contains(const RVector& v) const {
  if (v.size() != ambient_) throw UsageError("vector length does not match the ambient space");
  auto rows = basis_;
  rows.push_back(v);
  return rank(RationalField{}, Matrix<Rational>::from_rows(rows, ambient_)) == basis_.size();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  return join(other).size() == size();
}

LinearSubspace LinearSubspace::join(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw UsageError("subspaces of different ambient spaces");
  auto rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, rows);
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw UsageError("subspaces of different ambient spaces");
  auto forms = equations();
  auto more = other.equations();
  forms.insert(forms.end(), more.begin(), more.end());
  return from_equations(ambient_, forms);
}

std::vector<RVector> LinearSubspace::equations() const {
  if (basis_.empty()) return whole(ambient_).basis_;
  return span(ambient_, kernel_basis(RationalField{}, Matrix<Rational>::from_rows(basis_, ambient_))).basis_;
}

RVector LinearSubspace::combine(const RVector& coeffs) const {
  if (coeffs.size() != basis_.size()) throw UsageError("wrong number of combination coefficients");
  RVector v(ambient_, 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coeffs[k] * basis_[k][j];
  }
  return v;
}

std::string linear_form_to_string(const RVector& form) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const auto& c = form[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << '*';
    os << 'x' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string LinearSubspace::to_string() const {
  if (basis_.empty()) return "{}";
  if (basis_.size() == ambient_) return "P^" + std::to_string(ambient_ - 1);
  std::ostringstream os;
  os << "V(";
  auto eqs = equations();
  for (std::size_t k = 0; k < eqs.size(); ++k) os << (k ? ", " : "") << linear_form_to_string(eqs[k]);
  os << ')';
  return os.str();
}

RankKernel rank_kernel(const Matrix<Rational>& m) {
  auto ker = kernel_basis(RationalField{}, m);
  return {m.cols() - ker.size(), LinearSubspace::span(m.cols(), ker)};
}

}  // namespace vhess
