#include "vhess/perazzo.hpp"

#include <algorithm>
#include <map>

namespace vhess {

namespace {

constexpr std::int64_t kPointBound = 10000;

void require_cubic(const MultiPoly& f) {
  if (f.degree() != 3 || !f.is_homogeneous()) throw UsageError("Perazzo invariants need a homogeneous cubic");
}

Matrix<Rational> hess_at(const PolyMatrix& h, const RVector& p) {
  return h.evaluate(RationalField{}, std::span<const Rational>(p));
}

LinearSubspace joint_kernel(const PolyMatrix& h, const LinearSubspace& k) {
  const std::size_t n = h.rows();
  Matrix<Rational> stacked(n * k.size(), n, Rational(0));
  for (std::size_t b = 0; b < k.size(); ++b) {
    auto m = hess_at(h, k.basis()[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = m(i, j);
  }
  return rank_kernel(stacked).kernel;
}

RVector random_combination(const LinearSubspace& s, Rng& rng) {
  if (s.size() == 1) return s.basis().front();
  RVector c(s.size());
  for (auto& x : c) x = Rational(static_cast<long>(rng.nonzero_integer(100)));
  return primitive_vector(s.combine(c));
}

/// Sample of Z*: a general point of Sing Q_p for a general p.
RVector zstar_sample(const MultiPoly& f, const PolyMatrix& h, std::size_t generic_rank, std::uint64_t seed) {
  auto p = generic_point(f, generic_rank, seed);
  Rng rng(derive_seed(seed, 0x7a73, 0));
  return random_combination(rank_kernel(hess_at(h, p)).kernel, rng);
}

template <class T>
int majority(const std::vector<T>& v, std::size_t needed) {
  std::map<T, std::size_t> votes;
  for (const auto& x : v) ++votes[x];
  for (const auto& [value, count] : votes)
    if (count >= needed) return static_cast<int>(value);
  throw GenericityError("general fiber dimension is not stable across seeds");
}

/// Particular solution of m x = b, or nullopt when inconsistent.
std::optional<RVector> solve(const Matrix<Rational>& m, const RVector& b) {
  Matrix<Rational> aug(m.rows(), m.cols() + 1, Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ech = row_reduce(RationalField{}, aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  RVector x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = ech.rref(k, m.cols());
  return x;
}

/// dim Z* from the differential of p -> Sing Q_p at a general point. Since Hess is linear in
/// the point, differentiating Hess(p) k(p) = 0 along v gives Hess(p) k' = -Hess(v) k.
int zstar_dimension(const MultiPoly& f, const PolyMatrix& h, std::size_t generic_rank, std::uint64_t seed) {
  const std::size_t n = f.nvars();
  auto p = generic_point(f, generic_rank, seed);
  auto hp = hess_at(h, p);
  auto kernel = rank_kernel(hp).kernel;
  Rng rng(derive_seed(seed, 0x6469, 0));
  RVector c(kernel.size());
  for (auto& x : c) x = Rational(static_cast<long>(rng.nonzero_integer(100)));

  std::vector<RVector> tangent = kernel.basis();
  for (std::size_t i = 0; i < n; ++i) {
    RVector ei(n, Rational(0));
    ei[i] = 1;
    auto hv = hess_at(h, ei);
    RVector moved(n, Rational(0));
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      auto b = mat_vec(RationalField{}, hv, kernel.basis()[j]);
      for (auto& x : b) x = -x;
      auto dk = solve(hp, b);
      if (!dk) throw GenericityError("kernel of the Hessian does not vary smoothly at the sampled point");
      for (std::size_t t = 0; t < n; ++t) moved[t] += c[j] * (*dk)[t];
    }
    tangent.push_back(std::move(moved));
  }
  return LinearSubspace::span(n, tangent).dim();
}

}  // namespace

LinearSubspace perazzo_image(const MultiPoly& f, const RVector& p) {
  require_cubic(f);
  auto m = hess_at(hessian_matrix(f), p);
  auto rk = rank_kernel(m);
  if (rk.rank == 0) throw DegenerateError("Hessian vanishes at the point");
  return rk.kernel;
}

LinearSubspace perazzo_fiber(const MultiPoly& f, const RVector& p) {
  require_cubic(f);
  auto h = hessian_matrix(f);
  auto k = rank_kernel(hess_at(h, p));
  if (k.rank == 0) throw DegenerateError("Hessian vanishes at the point");
  return joint_kernel(h, k.kernel);
}

RVector generic_point(const MultiPoly& f, std::size_t generic_rank, std::uint64_t seed) {
  auto h = hessian_matrix(f);
  for (std::size_t attempt = 0; attempt < 32; ++attempt) {
    Rng rng(derive_seed(seed, 0x6770, attempt));
    auto p = rng.rational_point(f.nvars(), kPointBound);
    if (rank_kernel(hess_at(h, p)).rank == generic_rank) return p;
  }
  throw GenericityError("no point of generic Hessian rank found in 32 draws");
}

PerazzoRank perazzo_rank(const MultiPoly& f, const SamplingOptions& opts) {
  require_cubic(f);
  auto h = hessian_matrix(f);
  const std::size_t r = generic_rank(h, opts).claimed_rank;
  PerazzoRank out;
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto p = generic_point(f, r, derive_seed(opts.seed, 0x6d75, s));
    out.fiber_dims.push_back(joint_kernel(h, rank_kernel(hess_at(h, p)).kernel).dim());
  }
  out.fiber_dim = majority(out.fiber_dims, 5);
  out.mu = static_cast<int>(f.nvars()) - 1 - out.fiber_dim;
  return out;
}

SpecialVerdict is_special_perazzo(const MultiPoly& f, int mu, const SamplingOptions& opts) {
  require_cubic(f);
  auto h = hessian_matrix(f);
  const std::size_t r = generic_rank(h, opts).claimed_rank;
  const int N = static_cast<int>(f.nvars()) - 1;

  std::vector<LinearSubspace> fibers;
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto p = generic_point(f, r, derive_seed(opts.seed, 0x7370, s));
    fibers.push_back(joint_kernel(h, rank_kernel(hess_at(h, p)).kernel));
  }
  SpecialVerdict out;
  std::vector<LinearSubspace> meets;
  for (std::size_t a = 0; a < fibers.size(); ++a)
    for (std::size_t b = a + 1; b < fibers.size(); ++b) {
      meets.push_back(fibers[a].intersect(fibers[b]));
      out.pairwise_dims.push_back(meets.back().dim());
    }
  const bool all_equal = std::all_of(meets.begin(), meets.end(), [&](const auto& m) { return m == meets.front(); });
  out.intersections_vary = !all_equal;
  out.special = all_equal && meets.front().dim() == N - mu - 1;
  if (!out.special) return out;

  out.L = meets.front();
  out.zstar_in_L = true;
  for (std::uint64_t s = 0; s < 8; ++s) {
    if (!out.L->contains(zstar_sample(f, h, r, derive_seed(opts.seed, 0x7a4c, s)))) out.zstar_in_L = false;
  }
  out.consistent = out.zstar_in_L;
  return out;
}

ZStarAnalysis zstar_analyze(const MultiPoly& f, std::size_t samples, const SamplingOptions& opts) {
  require_cubic(f);
  const std::size_t n = f.nvars();
  auto h = hessian_matrix(f);
  const std::size_t r = generic_rank(h, opts).claimed_rank;
  std::uint64_t drawn = 0;
  auto draw = [&] { return zstar_sample(f, h, r, derive_seed(opts.seed, 0x7a53, drawn++)); };

  ZStarAnalysis out;
  for (std::size_t i = 0; i < samples; ++i) out.samples.push_back(draw());
  out.span = LinearSubspace::span(n, out.samples);
  out.dim = zstar_dimension(f, h, r, derive_seed(opts.seed, 0x7a44, 0));

  const auto pivots = out.span.pivot_columns();
  const std::size_t t = pivots.size();
  auto local = [&](const RVector& z) {
    RVector c(t);
    for (std::size_t k = 0; k < t; ++k) c[k] = z[pivots[k]];
    return c;
  };
  auto monomial_value = [](const Exponents& e, const RVector& c) {
    Rational v = 1;
    for (std::size_t k = 0; k < c.size(); ++k)
      for (unsigned m = 0; m < e[k]; ++m) v *= c[k];
    return v;
  };

  for (unsigned e = 2; e <= 4 && t >= 2; ++e) {
    const auto monos = monomials_of_degree(t, e);
    while (out.samples.size() < monos.size() + 8) out.samples.push_back(draw());
    Matrix<Rational> m(out.samples.size(), monos.size(), Rational(0));
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
      auto c = local(out.samples[i]);
      for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = monomial_value(monos[j], c);
    }
    auto kernel = rank_kernel(m).kernel;
    if (kernel.empty()) continue;

    MultiPoly fit(n);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const auto& coef = kernel.basis().front()[j];
      if (sgn(coef) == 0) continue;
      Exponents full(n, 0);
      for (std::size_t k = 0; k < t; ++k) full[pivots[k]] = monos[j][k];
      fit.add_term(full, coef);
    }
    fit = fit.primitive();

    bool held = true;
    for (int k = 0; k < 8 && held; ++k) {
      auto z = draw();
      held = fit.evaluate(RationalField{}, std::span<const Rational>(z)) == 0;
    }
    if (!held) continue;
    out.fit = std::move(fit);
    out.fit_degree = static_cast<int>(e);
    out.fit_count = kernel.size();
    break;
  }
  return out;
}

bool is_canonical_special_form(const MultiPoly& f, std::size_t sigma) {
  const std::size_t n = f.nvars();
  if (n == 0 || f.degree() != 3 || !f.is_homogeneous()) return false;
  const std::size_t N = n - 1;
  if (sigma < 2 || 2 * sigma > N) return false;
  for (const auto& [e, c] : f.terms()) {
    std::size_t low_degree = 0;
    for (std::size_t i = 0; i <= sigma; ++i) low_degree += e[i];
    if (low_degree == 0) continue;  // part of D
    if (low_degree != 1) return false;
    for (std::size_t i = sigma + 1; i <= N - sigma; ++i)
      if (e[i]) return false;  // C^i may only use the last sigma variables
  }
  return true;
}

PerazzoMatrix perazzo_matrix_A(const MultiPoly& f, std::size_t sigma) {
  if (!is_canonical_special_form(f, sigma)) throw NotCanonicalFormError("form does not have the canonical special shape");
  const std::size_t n = f.nvars();
  const std::size_t first = n - sigma;  // index of x_{N-sigma+1}
  PerazzoMatrix out{PolyMatrix(sigma, sigma, n), MultiPoly(n)};
  std::vector<MultiPoly> c;
  for (std::size_t j = 0; j <= sigma; ++j) c.push_back(f.differentiate(j));
  for (std::size_t k = 0; k < sigma; ++k) {
    for (std::size_t i = 0; i < sigma; ++i) {
      MultiPoly entry(n);
      for (std::size_t j = 0; j <= sigma; ++j) {
        auto second = c[j].differentiate(first + k).differentiate(first + i);
        if (second.is_zero()) continue;
        entry += MultiPoly::variable(n, j).scaled(second.coefficient(Exponents(n, 0)));
      }
      out.A.set(k, i, std::move(entry));
    }
  }
  out.det = det_symbolic(out.A);
  return out;
}

PerazzoProfile perazzo_profile(const MultiPoly& f, std::size_t generic_rank_value, const SamplingOptions& opts) {
  PerazzoProfile out;
  out.N = static_cast<int>(f.nvars()) - 1;
  out.codimZ = static_cast<int>(f.nvars()) - static_cast<int>(generic_rank_value);
  out.seed = opts.seed;
  auto rank = perazzo_rank(f, opts);
  out.mu = rank.mu;
  out.fiber_dim = rank.fiber_dim;
  out.fiber_dims = rank.fiber_dims;
  out.special = is_special_perazzo(f, out.mu, opts);
  out.zstar = zstar_analyze(f, 24, opts);
  return out;
}

}  // namespace vhess
