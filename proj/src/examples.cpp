#include "vhess/examples.hpp"

#include <functional>
#include <map>

#include "vhess/parse.hpp"
#include "vhess/polar.hpp"
#include "vhess/random.hpp"

namespace vhess {

namespace {

const char* const kBs = "x0*x3^2 + x1*x3*x4 + x2*x4^2";

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

/// Nonzero integer coefficients in [-9, 9], from a list or from a seeded stream.
class CoefficientSource {
 public:
  CoefficientSource(std::uint64_t seed, std::optional<std::vector<std::int64_t>> list)
      : rng_(derive_seed(seed, 0x636f, 0)), list_(std::move(list)) {
    if (list_ && list_->empty()) throw UsageError("explicit coefficient list is empty");
  }
  Rational next() {
    if (list_) return Rational(static_cast<long>((*list_)[pos_++ % list_->size()]));
    return Rational(static_cast<long>(rng_.nonzero_integer(9)));
  }

 private:
  Rng rng_;
  std::optional<std::vector<std::int64_t>> list_;
  std::size_t pos_ = 0;
};

/// Dense random form of degree `degree` in the variables `vars`.
MultiPoly random_form(std::size_t n, const std::vector<std::size_t>& vars, unsigned degree, CoefficientSource& src) {
  MultiPoly out(n);
  for (const auto& local : monomials_of_degree(vars.size(), degree)) {
    Exponents e(n, 0);
    for (std::size_t k = 0; k < vars.size(); ++k) e[vars[k]] = local[k];
    out.add_term(e, src.next());
  }
  return out;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

MultiPoly det3_generic() {
  PolyMatrix m(3, 3, 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, var(9, 3 * i + j));
  return det_symbolic(m);
}

/// x_i C^i(vars_c) summed over i = 0..top, plus D(vars_d).
MultiPoly linear_in_low(const FamilySpec& spec, std::size_t top, const std::vector<std::size_t>& vars_c,
                        const std::vector<std::size_t>& vars_d) {
  const std::size_t n = spec.N + 1;
  CoefficientSource src(spec.seed, spec.coefficients);
  MultiPoly f(n);
  for (std::size_t i = 0; i <= top; ++i) f += var(n, i) * random_form(n, vars_c, 2, src);
  if (!spec.zero_D) f += random_form(n, vars_d, 3, src);
  return f;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"bs",   "singp2", "exdet", "concat", "juxtapose", "det3", "det3_section",
          "pf6",  "pf6_section", "classe1", "simplified", "canSPCH", "mu1"};
}

PolyMatrix generic_skew6() {
  PolyMatrix m(6, 6, 15);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j, ++k) {
      m.set(i, j, var(15, k));
      m.set(j, i, -var(15, k));
    }
  return m;
}

RVector pf6_rank4_point() {
  RVector p(15, Rational(0));
  p[0] = 1;  // m01
  p[9] = 1;  // m23
  return p;
}

MultiPoly generate(const FamilySpec& spec) {
  const auto& name = spec.family;
  if (name == "bs") return parse_poly(kBs).poly;
  if (name == "singp2") return parse_poly("x0*x3^2 + x1*x4^2 + x2*x5^2").poly;
  if (name == "exdet") return parse_poly("x0*x4*x5 + x1*x4^2 + x2*x4*x6 + x3*x5*x6").poly;
  if (name == "concat") return concatenate(parse_poly(kBs).poly, {2, 5, 6, 4, 7}, 8);
  if (name == "juxtapose") {
    if (spec.copies < 1) throw UsageError("juxtapose needs at least one copy");
    MultiPoly bs = parse_poly(kBs).poly;
    MultiPoly f = bs;
    for (std::size_t c = 1; c < spec.copies; ++c) f = juxtapose(f, bs);
    return f;
  }
  if (name == "det3") return det3_generic();
  if (name == "det3_section") {
    MultiPoly f = det3_generic();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 8; ++i) images.push_back(var(8, i));
    images.push_back(MultiPoly(8));
    return f.compose(images);
  }
  if (name == "pf6") return pfaffian(generic_skew6());
  if (name == "pf6_section") {
    MultiPoly f = pfaffian(generic_skew6());
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 14; ++i) images.push_back(var(14, i));
    images.push_back(MultiPoly(14));
    return f.compose(images);
  }

  const std::size_t N = spec.N;
  if (name == "classe1") {
    if (N < 4 || spec.tau == 0 || spec.tau >= N) throw UsageError("classe1 needs N >= 4 and 0 < tau < N");
    return linear_in_low(spec, spec.tau, range(spec.tau + 1, N), range(spec.tau + 1, N));
  }
  if (name == "simplified" || name == "canSPCH") {
    const std::size_t t = spec.tau;
    if (t < 2 || 2 * t > N) throw UsageError(name + " needs 2 <= tau and 2 tau <= N");
    return linear_in_low(spec, t, range(N - t + 1, N), range(t + 1, N));
  }
  if (name == "mu1") {
    if (N < 4) throw UsageError("mu1 needs N >= 4");
    const std::size_t n = N + 1;
    MultiPoly f = var(n, 0) * var(n, N - 1).pow(2) + (var(n, 1) * var(n, N - 1) * var(n, N)).scaled(2) +
                  var(n, 2) * var(n, N).pow(2);
    if (!spec.zero_D) {
      CoefficientSource src(spec.seed, spec.coefficients);
      f += random_form(n, range(3, N), 3, src);
    }
    return f;
  }
  throw UsageError("unknown family '" + name + "'");
}

MultiPoly juxtapose(const MultiPoly& f, const MultiPoly& g) {
  if (f.degree() != g.degree() || !f.is_homogeneous() || !g.is_homogeneous())
    throw UsageError("juxtaposition needs homogeneous forms of equal degree");
  const std::size_t n = f.nvars() + g.nvars();
  std::vector<std::size_t> left(f.nvars()), right(g.nvars());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
  for (std::size_t i = 0; i < right.size(); ++i) right[i] = f.nvars() + i;
  return f.relabel(left, n) + g.relabel(right, n);
}

MultiPoly concatenate(const MultiPoly& f, const std::vector<std::size_t>& map, std::size_t nvars) {
  if (map.size() != f.nvars()) throw UsageError("concatenation map must cover every variable");
  std::vector<std::size_t> identity(f.nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  MultiPoly base = f.relabel(identity, nvars);
  MultiPoly copy = f.relabel(map, nvars);
  MultiPoly out = base;
  for (const auto& [e, c] : copy.terms()) {
    Rational existing = base.coefficient(e);
    if (sgn(existing) == 0) {
      out.add_term(e, c);
    } else if (existing != c) {
      throw ConstructionError("shared monomial carries different coefficients");
    }
  }
  return out;
}

MultiPoly concatenate(const MultiPoly& f, std::size_t shift) {
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i + shift;
  return concatenate(f, map, std::max(f.nvars(), f.nvars() + shift));
}

MultiPoly tangent_section(const MultiPoly& r, const RVector& p) {
  RationalField q;
  if (r.evaluate(q, std::span<const Rational>(p)) != 0) throw UsageError("point is not on the hypersurface");
  RVector grad(r.nvars());
  bool smooth = false;
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    grad[i] = r.differentiate(i).evaluate(q, std::span<const Rational>(p));
    smooth = smooth || sgn(grad[i]) != 0;
  }
  if (!smooth) throw UsageError("tangent section at a singular point");
  return restrict_to_hyperplane(r, grad).form;
}

}  // namespace vhess
