#include "vhess/polar.hpp"

#include <algorithm>
#include <map>

namespace vhess {

namespace {

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  std::vector<MultiPoly> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.differentiate(i));
  return g;
}

MultiPoly directional_derivative(const MultiPoly& g, const RVector& p) {
  MultiPoly out(g.nvars());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    out += g.differentiate(i).scaled(p[i]);
  }
  return out;
}

/// Dimension of the space of degree-e forms vanishing on the image of `grad`, estimated from
/// random evaluations mod p. It can only overestimate the true dimension.
std::size_t modular_kernel_dim(const std::vector<CompiledPoly>& grad, const std::vector<Exponents>& monos,
                               const PrimeField& field, std::uint64_t seed) {
  const std::size_t n = grad.size();
  IncrementalEchelon<PrimeField> ech(field, monos.size());
  std::size_t stale = 0;
  for (std::size_t t = 0; ech.rank() < monos.size() && stale < 8; ++t) {
    Rng rng(derive_seed(seed, 0x7265, t));
    auto x = rng.nonzero_point(field, n);
    std::vector<PrimeField::Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = grad[i](x);
    std::vector<PrimeField::Elem> row(monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
      PrimeField::Elem acc = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (monos[c][i]) acc = field.mul(acc, field.pow(v[i], monos[c][i]));
      row[c] = acc;
    }
    stale = ech.insert(std::move(row)) ? 0 : stale + 1;
  }
  return monos.size() - ech.rank();
}

MultiPoly form_from_coefficients(std::size_t nvars, const std::vector<Exponents>& monos, const RVector& coeffs) {
  MultiPoly g(nvars);
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (sgn(coeffs[c]) != 0) g.add_term(monos[c], coeffs[c]);
  return g;
}

}  // namespace

ProjPoint polar_map_eval(const MultiPoly& f, const RVector& p) {
  RationalField q;
  RVector v(f.nvars());
  bool nonzero = false;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    v[i] = f.differentiate(i).evaluate(q, std::span<const Rational>(p));
    nonzero = nonzero || sgn(v[i]) != 0;
  }
  if (!nonzero) throw DegenerateError("polar map undefined: all partials vanish at the point");
  return ProjPoint(std::move(v));
}

PolarHypersurface polar_hypersurface(const MultiPoly& f, const RVector& p, int s) {
  const int d = f.degree();
  if (s < 1 || s > d - 1) throw UsageError("polar degree must lie in [1, deg f - 1]");
  if (p.size() != f.nvars()) throw UsageError("point has wrong length");
  MultiPoly g = f;
  for (int k = 0; k < d - s; ++k) g = directional_derivative(g, p);
  PolarHypersurface out;
  out.everything = g.is_zero();
  out.form = std::move(g);
  return out;
}

LinearSubspace polar_quadric_sing(const MultiPoly& f, const RVector& p) {
  auto h = hessian_matrix(f).evaluate(RationalField{}, std::span<const Rational>(p));
  bool nonzero = false;
  for (std::size_t i = 0; i < h.rows() && !nonzero; ++i)
    for (std::size_t j = 0; j < h.cols() && !nonzero; ++j) nonzero = sgn(h(i, j)) != 0;
  if (!nonzero) throw DegenerateError("Hessian vanishes at the point");
  return rank_kernel(h).kernel;
}

RelationBasis find_relations(const MultiPoly& f, int max_degree, const SamplingOptions& opts) {
  if (max_degree < 1) throw UsageError("max degree must be at least 1");
  const std::size_t n = f.nvars();
  const auto grad = gradient(f);
  const PrimeField field(opts.primes.empty() ? kMersenne61 : opts.primes.front());
  std::vector<CompiledPoly> cgrad;
  for (const auto& g : grad) cgrad.emplace_back(g, field);

  RelationBasis out;
  for (int e = 1; e <= max_degree; ++e) {
    out.searched_up_to = e;
    const auto monos = monomials_of_degree(n, static_cast<unsigned>(e));
    const std::size_t guess = modular_kernel_dim(cgrad, monos, field, derive_seed(opts.seed, 0x72656c, e));
    if (guess == 0) continue;

    // Coefficient equations: for each x-monomial, sum_m c_m [x-mono] prod f_i^{m_i} = 0.
    std::map<Exponents, std::vector<std::pair<std::size_t, Rational>>, GrlexGreater> equations;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      MultiPoly image = MultiPoly::monomial(monos[c]).compose(grad);
      for (const auto& [x, coef] : image.terms()) equations[x].emplace_back(c, coef);
    }

    IncrementalEchelon<RationalField> ech(RationalField{}, monos.size());
    std::size_t target = monos.size() - guess;
    auto next = equations.begin();
    std::vector<RVector> kernel;
    while (true) {
      while (ech.rank() < target && next != equations.end()) {
        RVector row(monos.size(), Rational(0));
        for (const auto& [c, coef] : next->second) row[c] = coef;
        ech.insert(std::move(row));
        ++next;
      }
      auto candidate = LinearSubspace::span(monos.size(), ech.kernel());
      bool verified = true;
      for (const auto& v : candidate.basis()) {
        if (!form_from_coefficients(n, monos, v).compose(grad).is_zero()) {
          verified = false;
          break;
        }
      }
      if (verified) {
        kernel = candidate.basis();
        break;
      }
      target = ech.rank() + 1;
    }
    if (kernel.empty()) continue;
    out.degree = e;
    out.minimal = true;
    for (const auto& v : kernel) out.basis.push_back(form_from_coefficients(n, monos, v));
    return out;
  }
  return out;
}

GNMap gn_map_build(const MultiPoly& f, const MultiPoly& g) {
  if (g.nvars() != f.nvars()) throw UsageError("relation must use one dual variable per coordinate");
  const auto grad = gradient(f);
  if (g.is_zero() || !g.compose(grad).is_zero()) throw NotARelationError("g(grad f) is not identically zero");
  GNMap out;
  out.relation = g;
  bool any = false;
  Exponents content(f.nvars(), 0);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    out.components.push_back(g.differentiate(i).compose(grad));
    const auto& c = out.components.back();
    if (c.is_zero()) continue;
    auto m = c.monomial_content();
    if (!any) {
      content = m;
      any = true;
    } else {
      for (std::size_t k = 0; k < content.size(); ++k) content[k] = std::min(content[k], m[k]);
    }
  }
  out.stripped_content = content;
  out.degenerate = true;
  for (auto& c : out.components) {
    if (c.is_zero()) continue;
    c = c.divide_by_monomial(content);
    if (c.degree() > 0) out.degenerate = false;
  }
  return out;
}

GNIdentityReport gn_identity_check(const MultiPoly& f, const GNMap& gn, const SamplingOptions& opts) {
  const PrimeField field(opts.primes.empty() ? kMersenne61 : opts.primes.front());
  const std::size_t n = f.nvars();
  std::vector<CompiledPoly> grad, psi;
  for (std::size_t i = 0; i < n; ++i) grad.emplace_back(f.differentiate(i), field);
  for (const auto& c : gn.components) psi.emplace_back(c, field);

  auto eval_all = [&](const std::vector<CompiledPoly>& fs, const std::vector<PrimeField::Elem>& x) {
    std::vector<PrimeField::Elem> v(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) v[i] = fs[i](x);
    return v;
  };
  auto proportional = [&](const std::vector<PrimeField::Elem>& a, const std::vector<PrimeField::Elem>& b) {
    if (std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; })) return false;
    if (std::all_of(b.begin(), b.end(), [](auto v) { return v == 0; })) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (field.mul(a[i], b[j]) != field.mul(a[j], b[i])) return false;
    return true;
  };

  GNIdentityReport report;
  std::size_t attempt = 0;
  while (report.trials < opts.trials) {
    if (attempt > 16 * opts.trials + 64) throw GenericityError("psi vanished at every sampled point");
    Rng rng(derive_seed(opts.seed, 0x676e, attempt++));
    auto x = rng.nonzero_point(field, n);
    auto px = eval_all(psi, x);
    if (std::all_of(px.begin(), px.end(), [](auto v) { return v == 0; })) continue;
    const auto lambda = rng.nonzero(field);
    auto y = x;
    for (std::size_t i = 0; i < n; ++i) y[i] = field.add(x[i], field.mul(lambda, px[i]));
    ++report.trials;
    if (eval_all(grad, x) == eval_all(grad, y)) ++report.gradient_invariant;
    if (proportional(px, eval_all(psi, y))) ++report.psi_invariant;
  }
  return report;
}

Restriction restrict_to_hyperplane(const MultiPoly& f, const RVector& h) {
  const std::size_t n = f.nvars();
  if (h.size() != n) throw UsageError("hyperplane has wrong length");
  if (n < 2) throw UsageError("cannot restrict a form in fewer than two variables");
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;)
    if (sgn(h[i]) != 0) {
      k = i;
      break;
    }
  if (k == n) throw UsageError("the zero linear form is not a hyperplane");

  Restriction out;
  out.eliminated = k;
  out.chart.assign(n, RVector(n - 1, Rational(0)));
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      MultiPoly solved(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || sgn(h[j]) == 0) continue;
        const std::size_t nj = j < k ? j : j - 1;
        Rational c = -h[j] / h[k];
        solved += MultiPoly::variable(n - 1, nj).scaled(c);
        out.chart[i][nj] = c;
      }
      images.push_back(std::move(solved));
    } else {
      const std::size_t ni = i < k ? i : i - 1;
      images.push_back(MultiPoly::variable(n - 1, ni));
      out.chart[i][ni] = 1;
    }
  }
  out.form = f.compose(images);
  if (out.form.is_zero()) throw UsageError("the hyperplane is contained in the hypersurface");
  return out;
}

}  // namespace vhess
