#include "vhess/properties.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/perazzo.hpp"
#include "vhess/polar.hpp"
#include "vhess/random.hpp"

namespace vhess {

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
 public:
  explicit Tally(std::string name) : start_(Clock::now()) { r_.name = std::move(name); }

  template <class Describe>
  void record(bool ok, Describe describe) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures == 0) r_.first_failure = describe();
    ++r_.failures;
  }

  void record_many(std::size_t cases, std::size_t failures, const std::string& what) {
    r_.cases += cases;
    if (failures > 0 && r_.failures == 0) r_.first_failure = what;
    r_.failures += failures;
  }

  std::size_t cases() const { return r_.cases; }

  PropertyResult finish() {
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r_;
  }

 private:
  PropertyResult r_;
  Clock::time_point start_;
};

Rational eval_q(const MultiPoly& f, const RVector& p) {
  return f.evaluate(RationalField{}, std::span<const Rational>(p));
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  std::vector<MultiPoly> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.differentiate(i));
  return g;
}

RVector eval_all(const std::vector<MultiPoly>& fs, const RVector& p) {
  RVector out;
  for (const auto& f : fs) out.push_back(eval_q(f, p));
  return out;
}

bool all_zero(const RVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string point_str(const RVector& p) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < p.size(); ++i) s << (i ? ", " : "") << p[i].get_str();
  s << ")";
  return s.str();
}

/// Random form of degree d: each monomial is present with probability 1/2.
MultiPoly random_form(Rng& rng, std::size_t n, unsigned d) {
  MultiPoly f(n);
  while (f.is_zero()) {
    for (const auto& m : monomials_of_degree(n, d))
      if (rng.integer(0, 1) == 1) f.add_term(m, Rational(static_cast<long>(rng.nonzero_integer(9))));
  }
  return f;
}

RVector small_point(Rng& rng, std::size_t n, std::int64_t bound = 20) {
  RVector p(n);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : p) {
      x = Rational(static_cast<long>(rng.integer(-bound, bound)));
      nonzero = nonzero || sgn(x) != 0;
    }
  }
  return p;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Matrix<Rational> hess_at(const PolyMatrix& h, const RVector& p) {
  return h.evaluate(RationalField{}, std::span<const Rational>(p));
}

Rational bilinear(const Matrix<Rational>& m, const RVector& a, const RVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += a[i] * m(i, j) * b[j];
  return s;
}

SamplingOptions sampling(std::uint64_t seed) {
  SamplingOptions o;
  o.seed = seed;
  return o;
}

/// A point of the kernel of Hess(f) at a generic point; for codim Z = 1 this is a point of Z*.
RVector zstar_sample(const CorpusEntry& e, Rng& rng, std::uint64_t seed) {
  auto p = generic_point(e.f, e.generic_rank, seed);
  auto k = perazzo_image(e.f, p);
  RVector c(k.size());
  for (auto& x : c) x = Rational(static_cast<long>(rng.nonzero_integer(30)));
  return k.combine(c);
}

/// GN maps of every lowest-degree relation (degree <= 3), computed once per corpus entry.
class RelationCache {
 public:
  explicit RelationCache(std::uint64_t seed) : seed_(seed) {}
  const std::vector<GNMap>& maps(const CorpusEntry& e) {
    auto it = cache_.find(e.name);
    if (it != cache_.end()) return it->second;
    std::vector<GNMap> out;
    auto rel = find_relations(e.f, 3, sampling(seed_));
    for (const auto& g : rel.basis) {
      auto gn = gn_map_build(e.f, g);
      if (!gn.degenerate) out.push_back(std::move(gn));
    }
    return cache_.emplace(e.name, std::move(out)).first->second;
  }

 private:
  std::uint64_t seed_;
  std::map<std::string, std::vector<GNMap>> cache_;
};

}  // namespace

std::vector<CorpusEntry> vanishing_corpus(std::uint64_t seed, std::size_t random_instances) {
  std::vector<std::pair<std::string, MultiPoly>> forms;
  for (const char* name : {"bs", "exdet", "concat", "det3_section", "pf6_section"}) {
    FamilySpec s;
    s.family = name;
    forms.emplace_back(name, generate(s));
  }
  for (std::size_t copies : {2, 3}) {
    FamilySpec s;
    s.family = "juxtapose";
    s.copies = copies;
    forms.emplace_back("juxtapose" + std::to_string(copies), generate(s));
  }
  for (std::size_t k = 0; k < random_instances; ++k) {
    FamilySpec s;
    s.seed = derive_seed(seed, 0x636f, k);
    const std::size_t round = k / 3;
    switch (k % 3) {
      case 0:
        s.family = "mu1";
        s.N = 4 + round % 5;
        break;
      case 1:
        s.family = "canSPCH";
        s.tau = 2 + round % 2;
        s.N = 2 * s.tau + round % (9 - 2 * s.tau);
        break;
      default:
        s.family = "simplified";
        s.tau = 2 + (round + 1) % 2;
        s.N = 2 * s.tau + (round + 1) % (9 - 2 * s.tau);
        break;
    }
    std::ostringstream name;
    name << s.family << "(N=" << s.N;
    if (s.tau) name << ", tau=" << s.tau;
    name << ", seed=" << s.seed << ")";
    forms.emplace_back(name.str(), generate(s));
  }

  std::vector<CorpusEntry> out;
  for (auto& [name, f] : forms) {
    if (!vertex_space(f).empty()) continue;
    auto rank = generic_rank(hessian_matrix(f), sampling(seed)).claimed_rank;
    out.push_back({name, std::move(f), rank});
  }
  return out;
}

PropertyResult check_reciprocity(std::uint64_t seed, std::size_t min_cases) {
  Tally t("reciprocity of polars");
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    Rng rng(derive_seed(seed, 0x7263, k));
    const std::size_t n = 3 + k % 3;
    const int d = 3 + static_cast<int>((k / 3) % 2);
    auto f = random_form(rng, n, static_cast<unsigned>(d));
    auto p = small_point(rng, n);
    auto q = small_point(rng, n);
    const int s = 1 + static_cast<int>(rng.integer(0, d - 2));

    // s! H^s_p(q) = (d-s)! H^(d-s)_q(p): both sides are multiples of the same polarization value.
    const Rational lhs = factorial(s) * eval_q(polar_hypersurface(f, p, s).form, q);
    const Rational rhs = factorial(d - s) * eval_q(polar_hypersurface(f, q, d - s).form, p);

    // Constructive membership: put q on the polar hyperplane of p, then p must lie on H^(d-1)_q.
    bool member = true;
    auto ell = polar_hypersurface(f, p, 1).form;
    if (!ell.is_zero()) {
      RVector coef(n);
      std::size_t j = n;
      for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        coef[i] = ell.coefficient(e);
        if (sgn(coef[i]) != 0) j = i;
      }
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) acc += coef[i] * q[i];
      q[j] = -acc / coef[j];
      member = sgn(eval_q(ell, q)) == 0 && sgn(eval_q(polar_hypersurface(f, q, d - 1).form, p)) == 0;
    }
    t.record(lhs == rhs && member, [&] {
      return "f = " + print_poly(f) + ", s = " + std::to_string(s) + ", p = " + point_str(p);
    });
  }
  return t.finish();
}

PropertyResult check_euler(std::uint64_t seed, std::size_t min_cases) {
  Tally t("Euler relation");
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    Rng rng(derive_seed(seed, 0x6575, k));
    const std::size_t n = 2 + k % 5;
    const unsigned d = 2 + static_cast<unsigned>((k / 5) % 3);
    auto f = random_form(rng, n, d);
    auto grad = gradient(f);

    MultiPoly euler(n);
    for (std::size_t i = 0; i < n; ++i) euler += MultiPoly::variable(n, i) * grad[i];
    bool ok = euler == f.scaled(d);

    auto p = small_point(rng, n);
    ok = ok && eval_q(polar_hypersurface(f, p, static_cast<int>(d) - 1).form, p) == d * eval_q(f, p);

    // Hess(p) p = (d-1) grad f(p).
    auto h = hess_at(hessian_matrix(f), p);
    auto g = eval_all(grad, p);
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += h(i, j) * p[j];
      ok = s == (d - 1) * g[i];
    }
    t.record(ok, [&] { return "f = " + print_poly(f) + ", p = " + point_str(p); });
  }
  return t.finish();
}

PropertyResult check_gn_identities(std::uint64_t seed, std::size_t min_cases) {
  Tally t("Gordan-Noether identities");
  RelationCache relations(seed);
  auto corpus = vanishing_corpus(seed, 12);
  std::size_t round = 0;
  while (t.cases() < min_cases || round == 0) {
    for (const auto& e : corpus) {
      const auto& maps = relations.maps(e);
      for (std::size_t i = 0; i < maps.size(); ++i) {
        auto opts = sampling(derive_seed(seed, 0x676e, round * 1000 + i));
        auto rep = gn_identity_check(e.f, maps[i], opts);
        const auto passed = std::min(rep.gradient_invariant, rep.psi_invariant);
        t.record_many(rep.trials, rep.trials - passed,
                      e.name + ", relation " + print_poly(maps[i].relation));
      }
    }
    ++round;
  }
  return t.finish();
}

PropertyResult check_partial2f(std::uint64_t seed, std::size_t min_cases) {
  Tally t("Hess(f) annihilates the GN map");
  RelationCache relations(seed);
  auto corpus = vanishing_corpus(seed, 2 * min_cases / 3);
  for (const auto& e : corpus) {
    auto h = hessian_matrix(e.f);
    for (const auto& gn : relations.maps(e)) {
      for (std::size_t j = 0; j < e.f.nvars(); ++j) {
        MultiPoly s(e.f.nvars());
        for (std::size_t i = 0; i < e.f.nvars(); ++i) s += h(i, j) * gn.components[i];
        t.record(s.is_zero(), [&] { return e.name + ", column " + std::to_string(j); });
      }
    }
  }
  return t.finish();
}

PropertyResult check_hyperplane_restriction(std::uint64_t seed, std::size_t min_cases) {
  Tally t("restriction to a hyperplane commutes with the gradient");
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    Rng rng(derive_seed(seed, 0x6872, k));
    const std::size_t n = 3 + k % 4;
    const unsigned d = 2 + static_cast<unsigned>((k / 4) % 3);
    auto f = random_form(rng, n, d);
    auto h = small_point(rng, n, 5);
    Restriction r;
    try {
      r = restrict_to_hyperplane(f, h);
    } catch (const UsageError&) {
      continue;  // the hyperplane is a component of V(f)
    }
    auto xp = small_point(rng, n - 1);
    RVector x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) x[i] += r.chart[i][j] * xp[j];
    auto gf = eval_all(gradient(f), x);
    auto gg = eval_all(gradient(r.form), xp);
    bool ok = eval_q(r.form, xp) == eval_q(f, x);
    for (std::size_t j = 0; j + 1 < n && ok; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += r.chart[i][j] * gf[i];
      ok = s == gg[j];
    }
    t.record(ok, [&] { return "f = " + print_poly(f) + ", h = " + point_str(h); });
  }
  return t.finish();
}

PropertyResult check_pencil_span(std::uint64_t seed, std::size_t min_cases) {
  Tally t("span of singular loci along a pencil lies in the polar quadrics");
  auto corpus = vanishing_corpus(seed, 12);
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    const auto& e = corpus[k % corpus.size()];
    const std::size_t n = e.f.nvars();
    const std::size_t kernel_size = n - e.generic_rank;
    Rng rng(derive_seed(seed, 0x7063, k));
    auto p = rng.rational_point(n, 50);
    auto q = rng.rational_point(n, 50);
    auto member = [&](long lambda) {
      RVector m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = p[i] + lambda * q[i];
      return m;
    };
    std::vector<RVector> sing;
    for (long lambda = 1; lambda <= 12 && sing.size() < 3 * kernel_size; ++lambda) {
      auto img = perazzo_image(e.f, member(lambda * 7 - 3));
      if (img.size() != kernel_size) continue;  // special member of the pencil
      for (const auto& b : img.basis()) sing.push_back(b);
    }
    auto span = LinearSubspace::span(n, sing);
    auto h = hessian_matrix(e.f);
    bool ok = !span.empty();
    for (const auto& tp : {member(101), rng.rational_point(n, 50)}) {
      auto ht = hess_at(h, tp);
      for (const auto& a : span.basis())
        for (const auto& b : span.basis()) ok = ok && sgn(bilinear(ht, a, b)) == 0;
    }
    t.record(ok, [&] { return e.name + ", span " + span.to_string(); });
  }
  return t.finish();
}

PropertyResult check_classe1(std::uint64_t seed, std::size_t min_cases) {
  Tally t("classe1: large tau forces hess = 0 or a cone");
  std::size_t count_hess = 0;
  std::size_t count_cone = 0;
  const std::size_t half = min_cases / 2;
  for (std::size_t k = 0; count_hess < half || count_cone < half || t.cases() < min_cases; ++k) {
    Rng rng(derive_seed(seed, 0x6331, k));
    const std::size_t N = 4 + k % 5;
    auto forces_hess = [&](std::size_t tau) { return 2 * tau > N - 1; };
    auto forces_cone = [&](std::size_t tau) { return tau + 1 > (N - tau) * (N - tau + 1) / 2; };
    std::vector<std::size_t> taus;
    for (std::size_t tau = 1; tau < N; ++tau) {
      const bool want_hess = count_hess < half && forces_hess(tau);
      const bool want_cone = count_cone < half && forces_cone(tau);
      if (want_hess || want_cone || (count_hess >= half && count_cone >= half && forces_hess(tau)))
        taus.push_back(tau);
    }
    if (taus.empty()) continue;
    FamilySpec s;
    s.family = "classe1";
    s.N = N;
    s.tau = taus[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(taus.size()) - 1))];
    s.seed = derive_seed(seed, 0x6332, k);
    auto f = generate(s);
    auto describe = [&] {
      return "classe1 N=" + std::to_string(N) + " tau=" + std::to_string(s.tau) + ": " + print_poly(f);
    };
    if (forces_hess(s.tau)) {
      ++count_hess;
      t.record(hess_vanishes(f, HessMode::Symbolic).vanishes, describe);
    }
    if (forces_cone(s.tau)) {
      ++count_cone;
      t.record(!vertex_space(f).empty(), describe);
    }
  }
  return t.finish();
}

PropertyResult check_simplified_converse(std::uint64_t seed, std::size_t min_cases) {
  Tally t("simplified and canonical special forms: hess = 0 and codim Z = 1");
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    FamilySpec s;
    s.family = k % 2 ? "canSPCH" : "simplified";
    s.N = 4 + (k / 2) % 6;
    s.tau = 2 + (k / 12) % (s.N / 2 - 1);
    s.seed = derive_seed(seed, 0x7366, k);
    auto f = generate(s);
    const bool vanishes = hess_vanishes(f, HessMode::Symbolic).vanishes;
    const auto rank = generic_rank(hessian_matrix(f), sampling(seed)).claimed_rank;
    t.record(vanishes && rank == s.N, [&] {
      return s.family + " N=" + std::to_string(s.N) + " tau=" + std::to_string(s.tau) + " rank " +
             std::to_string(rank) + ": " + print_poly(f);
    });
  }
  return t.finish();
}

PropertyResult check_fiber_linearity(std::uint64_t seed, std::size_t min_cases) {
  Tally t("points of a fiber share the Perazzo image");
  auto corpus = vanishing_corpus(seed, 12);
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    const auto& e = corpus[k % corpus.size()];
    Rng rng(derive_seed(seed, 0x666c, k));
    auto p = generic_point(e.f, e.generic_rank, derive_seed(seed, 0x666d, k));
    auto image = perazzo_image(e.f, p);
    auto fiber = perazzo_fiber(e.f, p);
    bool ok = fiber.contains(p);
    RVector q;
    for (int attempt = 0; attempt < 8 && ok; ++attempt) {
      RVector c(fiber.size());
      for (auto& x : c) x = Rational(static_cast<long>(rng.nonzero_integer(50)));
      auto cand = fiber.combine(c);
      auto img = perazzo_image(e.f, cand);
      if (img.size() != image.size()) continue;  // lands on the degeneracy locus of the fiber
      q = cand;
      ok = img == image;
      break;
    }
    ok = ok && !q.empty();
    t.record(ok, [&] { return e.name + ", p = " + point_str(p); });
  }
  return t.finish();
}

PropertyResult check_dimension_bounds(std::uint64_t seed, std::size_t min_cases) {
  Tally t("dim Z* bounds");
  auto corpus = vanishing_corpus(seed, min_cases);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& e = corpus[k];
    auto prof = perazzo_profile(e.f, e.generic_rank, sampling(derive_seed(seed, 0x6462, k)));
    const int dimz = prof.zstar.dim;
    bool ok = dimz <= prof.codimZ - 1 + prof.mu;
    if (prof.codimZ == 1) ok = ok && 2 * dimz <= prof.N - 1;
    t.record(ok, [&] {
      return e.name + ": dim Z*=" + std::to_string(dimz) + ", codim Z=" + std::to_string(prof.codimZ) +
             ", mu=" + std::to_string(prof.mu);
    });
  }
  return t.finish();
}

PropertyResult check_zstar_singular(std::uint64_t seed, std::size_t min_cases) {
  Tally t("Z* lies in Sing X and in the base locus of the GN map");
  RelationCache relations(seed);
  auto corpus = vanishing_corpus(seed, 12);
  for (std::size_t k = 0; t.cases() < min_cases; ++k) {
    const auto& e = corpus[k % corpus.size()];
    Rng rng(derive_seed(seed, 0x7a73, k));
    auto z = zstar_sample(e, rng, derive_seed(seed, 0x7a74, k));
    bool ok = all_zero(eval_all(gradient(e.f), z));
    auto p = rng.rational_point(e.f.nvars(), 50);
    for (const auto& gn : relations.maps(e)) {
      ok = ok && all_zero(eval_all(gn.components, z));
      auto psi_p = eval_all(gn.components, p);
      ok = ok && all_zero(eval_all(gn.components, psi_p));
    }
    t.record(ok, [&] { return e.name + ", z = " + point_str(z); });
  }
  return t.finish();
}

PropertyResult check_secant_chords(std::uint64_t seed, std::size_t min_cases) {
  Tally t("chords of Z* lie in Sing X for Special instances");
  auto corpus = vanishing_corpus(seed, 12);
  std::size_t special_seen = 0;
  for (std::size_t k = 0; k < corpus.size() && t.cases() < min_cases; ++k) {
    const auto& e = corpus[k];
    auto opts = sampling(derive_seed(seed, 0x7363, k));
    auto mu = perazzo_rank(e.f, opts).mu;
    if (!is_special_perazzo(e.f, mu, opts).special) continue;
    ++special_seen;
    auto grad = gradient(e.f);
    for (std::size_t c = 0; c < 12; ++c) {
      Rng rng(derive_seed(seed, 0x7364, k * 100 + c));
      auto z1 = zstar_sample(e, rng, derive_seed(seed, 0x7365, k * 100 + 2 * c));
      auto z2 = zstar_sample(e, rng, derive_seed(seed, 0x7365, k * 100 + 2 * c + 1));
      const Rational a = static_cast<long>(rng.nonzero_integer(20));
      const Rational b = static_cast<long>(rng.nonzero_integer(20));
      RVector r(z1.size());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = a * z1[i] + b * z2[i];
      t.record(all_zero(eval_all(grad, r)), [&] { return e.name + ", chord point " + point_str(r); });
    }
  }
  if (special_seen == 0) t.record(false, [] { return std::string("no Special instance in the corpus"); });
  return t.finish();
}

std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
  return {check_reciprocity(seed),         check_euler(seed),          check_gn_identities(seed),
          check_partial2f(seed),           check_hyperplane_restriction(seed), check_pencil_span(seed),
          check_classe1(seed),             check_simplified_converse(seed),    check_fiber_linearity(seed),
          check_dimension_bounds(seed),    check_zstar_singular(seed),         check_secant_chords(seed)};
}

}  // namespace vhess
