#include "vhess/hessian.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "vhess/univariate.hpp"

namespace vhess {

namespace {

constexpr double kCertain = -std::numeric_limits<double>::infinity();

int max_entry_degree(const PolyMatrix& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
  return d;
}

/// log2 of (degree / p)^trials, the Schwartz-Zippel miss probability for one prime.
double log2_miss(double degree, std::uint64_t p, std::size_t trials) {
  if (degree <= 0) return kCertain;
  return static_cast<double>(trials) * (std::log2(degree) - std::log2(static_cast<double>(p)));
}

}  // namespace

std::string to_string(Certainty c) { return c == Certainty::ExactSymbolic ? "exact-symbolic" : "monte-carlo"; }

PolyMatrix hessian_matrix(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  PolyMatrix h(n, n, n);
  std::vector<MultiPoly> first;
  first.reserve(n);
  for (std::size_t i = 0; i < n; ++i) first.push_back(f.differentiate(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      MultiPoly e = first[i].differentiate(j);
      if (i != j) h.set(j, i, e);
      h.set(i, j, std::move(e));
    }
  }
  return h;
}

RankCertificate generic_rank(const PolyMatrix& m, const SamplingOptions& opts) {
  RankCertificate cert;
  cert.seed = opts.seed;
  cert.primes_used = opts.primes;
  const std::size_t full = std::min(m.rows(), m.cols());
  for (std::size_t pi = 0; pi < opts.primes.size(); ++pi) {
    PrimeField field(opts.primes[pi]);
    CompiledPolyMatrix cm(m, field);
    for (std::size_t t = 0; t < opts.trials; ++t) {
      Rng rng(derive_seed(opts.seed, 0x6e6b + pi, t));
      auto pt = rng.nonzero_point(field, m.nvars());
      std::size_t r = rank(field, cm(pt));
      ++cert.trials;
      if (r > cert.claimed_rank || cert.witness_point.empty()) {
        if (r >= cert.claimed_rank) {
          cert.claimed_rank = r;
          cert.witness_point = pt;
          cert.witness_prime = field.modulus();
        }
      }
    }
  }
  if (cert.claimed_rank == full) {
    cert.certainty = Certainty::ExactSymbolic;
    cert.log2_failure_bound = kCertain;
  } else {
    cert.certainty = Certainty::MonteCarlo;
    const double minor_degree = static_cast<double>((cert.claimed_rank + 1) * static_cast<std::size_t>(max_entry_degree(m)));
    double bound = 0;
    for (auto p : opts.primes) bound += log2_miss(minor_degree, p, opts.trials);
    cert.log2_failure_bound = bound;
  }
  return cert;
}

HessVanishing hess_vanishes(const MultiPoly& f, HessMode mode, const SamplingOptions& opts) {
  HessVanishing out;
  PolyMatrix h = hessian_matrix(f);
  out.rank = generic_rank(h, opts);
  if (mode == HessMode::Symbolic) {
    out.determinant = det_symbolic(h);
    out.vanishes = out.determinant.is_zero();
    out.certainty = Certainty::ExactSymbolic;
    out.log2_failure_bound = kCertain;
    return out;
  }
  // The rank trials above already evaluated Hess at trials * primes points; a full rank at any
  // of them is a nonvanishing determinant there.
  out.vanishes = out.rank.claimed_rank < h.rows();
  if (!out.vanishes) {
    out.certainty = Certainty::ExactSymbolic;
    out.log2_failure_bound = kCertain;
  } else {
    out.certainty = Certainty::MonteCarlo;
    const int d = f.degree();
    const double hess_degree = static_cast<double>(f.nvars()) * std::max(d - 2, 0);
    double bound = 0;
    for (auto p : opts.primes) bound += log2_miss(hess_degree, p, opts.trials);
    out.log2_failure_bound = bound;
  }
  return out;
}

Matrix<Rational> partials_coefficient_matrix(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  std::vector<MultiPoly> partials;
  std::map<Exponents, std::size_t, GrlexGreater> columns;
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(f.differentiate(i));
    for (const auto& [e, c] : partials.back().terms()) columns.emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, idx] : columns) idx = k++;
  Matrix<Rational> m(n, columns.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [e, c] : partials[i].terms()) m(i, columns.at(e)) = c;
  return m;
}

LinearSubspace vertex_space(const MultiPoly& f) {
  auto coeffs = partials_coefficient_matrix(f);
  return LinearSubspace::span(f.nvars(), kernel_basis(RationalField{}, coeffs.transposed()));
}

std::vector<PrimeField::Elem> sample_point_on(const MultiPoly& f, const PrimeField& field, std::uint64_t seed,
                                              std::size_t max_lines) {
  if (f.is_zero()) throw UsageError("cannot sample on the zero polynomial");
  const std::size_t n = f.nvars();
  const int d = f.degree();
  CompiledPoly cf(f, field);
  for (std::size_t line = 0; line < max_lines; ++line) {
    Rng rng(derive_seed(seed, 0x5a4d, line));
    auto a = rng.nonzero_point(field, n);
    auto b = rng.nonzero_point(field, n);
    std::vector<PrimeField::Elem> ts, vals;
    std::vector<PrimeField::Elem> pt(n);
    for (int k = 0; k <= d; ++k) {
      const auto t = static_cast<PrimeField::Elem>(k);
      for (std::size_t i = 0; i < n; ++i) pt[i] = field.add(a[i], field.mul(t, b[i]));
      ts.push_back(t);
      vals.push_back(cf(pt));
    }
    UniPoly g = UniPoly::interpolate(field, ts, vals);
    PrimeField::Elem root = 0;
    if (!g.is_zero()) {
      auto r = find_root(g, rng);
      if (!r) continue;
      root = *r;
    }
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      pt[i] = field.add(a[i], field.mul(root, b[i]));
      nonzero = nonzero || pt[i] != 0;
    }
    if (nonzero) return pt;
  }
  throw SamplingError("no point of V(f) found on " + std::to_string(max_lines) + " random lines");
}

RankCertificate rank_mod_f(const MultiPoly& f, const SamplingOptions& opts) {
  RankCertificate cert;
  cert.seed = opts.seed;
  cert.primes_used = opts.primes;
  cert.certainty = Certainty::MonteCarlo;
  const std::size_t per_prime = std::max<std::size_t>(opts.trials, 16);
  const int d = std::max(f.degree(), 1);
  PolyMatrix h = hessian_matrix(f);
  const double entry_degree = std::max(d - 2, 0);
  double bound = 0;
  for (std::size_t pi = 0; pi < opts.primes.size(); ++pi) {
    PrimeField field(opts.primes[pi]);
    CompiledPolyMatrix ch(h, field);
    std::vector<CompiledPoly> grad;
    for (std::size_t i = 0; i < f.nvars(); ++i) grad.emplace_back(f.differentiate(i), field);
    std::size_t accepted = 0;
    for (std::size_t attempt = 0; accepted < per_prime; ++attempt) {
      if (attempt >= 8 * per_prime) throw SamplingError("too many singular samples on V(f)");
      auto pt = sample_point_on(f, field, derive_seed(opts.seed, 0x726b + pi, attempt));
      bool smooth = false;
      for (const auto& g : grad) smooth = smooth || g(pt) != 0;
      if (!smooth) continue;
      ++accepted;
      ++cert.trials;
      std::size_t r = rank(field, ch(pt));
      if (r > cert.claimed_rank || cert.witness_point.empty()) {
        cert.claimed_rank = std::max(r, cert.claimed_rank);
        if (r == cert.claimed_rank) {
          cert.witness_point = pt;
          cert.witness_prime = field.modulus();
        }
      }
    }
    // A nonzero minor M of degree D restricted to V(f) misses a root of f on a random line only
    // when the resultant of f and M along the line vanishes: degree <= 2 * d * D in the line.
    const double minor_degree = static_cast<double>(cert.claimed_rank + 1) * entry_degree;
    bound += log2_miss(2.0 * d * minor_degree, field.modulus(), per_prime);
  }
  cert.log2_failure_bound = cert.claimed_rank == f.nvars() ? kCertain : bound;
  return cert;
}

}  // namespace vhess
