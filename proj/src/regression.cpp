#include "vhess/regression.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "vhess/analysis.hpp"
#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/properties.hpp"
#include "vhess/report.hpp"

namespace vhess {

namespace {

/// Collects named checks for one criterion; `actual` accumulates what was observed.
class Checks {
 public:
  void expect(const std::string& what, bool holds, const std::string& observed) {
    observed_.push_back(what + ": " + observed);
    if (!holds) failures_.push_back(what + " (got " + observed + ")");
  }
  std::string actual() const {
    std::string s;
    for (const auto& o : observed_) s += (s.empty() ? "" : "; ") + o;
    return s;
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> observed_;
  std::vector<std::string> failures_;
};

MultiPoly poly(const std::string& text, std::size_t nvars) {
  return parse_poly(PolySource{text, nvars}).poly;
}

bool same_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
  return print_poly(a.primitive()) == print_poly(b.primitive());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dual_list(const std::vector<MultiPoly>& gs) {
  std::string s = "{";
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + print_dual(gs[i]);
  return s + "}";
}

/// Whether g is a linear combination of the forms in `basis` (all of one degree and ring).
bool in_span(const std::vector<MultiPoly>& basis, const MultiPoly& g) {
  std::map<Exponents, std::size_t, GrlexGreater> cols;
  auto collect = [&](const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) cols.emplace(e, 0);
  };
  for (const auto& b : basis) collect(b);
  collect(g);
  std::size_t k = 0;
  for (auto& [e, idx] : cols) idx = k++;
  auto rows_of = [&](const std::vector<MultiPoly>& ps) {
    Matrix<Rational> m(ps.size(), cols.size(), Rational(0));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (const auto& [e, c] : ps[i].terms()) m(i, cols.at(e)) = c;
    return m;
  };
  auto with = basis;
  with.push_back(g);
  return rank_kernel(rows_of(basis)).rank == rank_kernel(rows_of(with)).rank;
}

MultiPoly family(const std::string& name) {
  FamilySpec s;
  s.family = name;
  return generate(s);
}

AnalysisOptions analysis_options(std::uint64_t seed) {
  AnalysisOptions o;
  o.sampling.seed = seed;
  return o;
}

std::string bound_str(double b) {
  if (std::isinf(b) && b < 0) return "certain";
  std::ostringstream s;
  s << "2^" << std::fixed << std::setprecision(1) << b;
  return s.str();
}

std::string hess_str(const HessVanishing& h) {
  return std::string(h.vanishes ? "0" : "nonzero") + " [" + to_string(h.certainty) + "]";
}

// Criterion 1.
void bourgain_sacksteder(Checks& c, std::uint64_t seed) {
  auto f = family("bs");
  auto r = classify(f, analysis_options(seed));
  c.expect("hess = 0 symbolic", r.hess.vanishes && r.hess.certainty == Certainty::ExactSymbolic, hess_str(r.hess));
  c.expect("not a cone", r.is_cone == false, r.vertex ? r.vertex->to_string() : "n/a");
  c.expect("codim Z = 1", r.codimZ == 1, r.codimZ ? std::to_string(*r.codimZ) : "n/a");
  const bool rel_ok = r.relations && r.relations->degree == 2 && r.relations->basis.size() == 1 &&
                      same_up_to_scalar(r.relations->basis[0], poly("x0*x2 - x1^2", 5));
  c.expect("degree-2 relations {y0*y2 - y1^2}", rel_ok, r.relations ? dual_list(r.relations->basis) : "n/a");
  if (!r.perazzo) {
    c.expect("Perazzo invariants computed", false, r.summary);
    return;
  }
  const auto& p = *r.perazzo;
  c.expect("mu = 1", p.mu == 1, std::to_string(p.mu));
  const bool special = p.special.special && p.special.L && *p.special.L == LinearSubspace::coordinate(5, {3, 4});
  c.expect("Special with L = V(x3, x4)", special,
           p.special.L ? p.special.L->to_string() : std::string(p.special.special ? "special" : "not special"));
  c.expect("Z* fit ~ 4*x0*x2 - x1^2", p.zstar.fit && same_up_to_scalar(*p.zstar.fit, poly("4*x0*x2 - x1^2", 5)),
           p.zstar.fit ? print_poly(*p.zstar.fit) : "none");
  c.expect("rank_mod_f = 4", r.rank_mod_f && r.rank_mod_f->claimed_rank == 4,
           r.rank_mod_f ? std::to_string(r.rank_mod_f->claimed_rank) : "n/a");
}

// Criterion 2.
void control(Checks& c, std::uint64_t) {
  auto h = hess_vanishes(family("singp2"), HessMode::Symbolic);
  c.expect("hess != 0 symbolic", !h.vanishes && h.certainty == Certainty::ExactSymbolic,
           hess_str(h) + ", det = " + print_poly(h.determinant));
}

// Criterion 3.
void determinantal_p6(Checks& c, std::uint64_t seed) {
  auto f = family("exdet");
  auto r = classify(f, analysis_options(seed));
  c.expect("hess = 0", r.hess.vanishes && r.hess.certainty == Certainty::ExactSymbolic, hess_str(r.hess));
  if (!r.perazzo) {
    c.expect("Perazzo invariants computed", false, r.summary);
    return;
  }
  const auto& p = *r.perazzo;
  c.expect("mu = 2", p.mu == 2, std::to_string(p.mu));
  c.expect("fibers P^4", p.fiber_dim == 4, "P^" + std::to_string(p.fiber_dim));
  const bool special = p.special.special && p.special.L && *p.special.L == LinearSubspace::coordinate(7, {4, 5, 6});
  c.expect("Special with L = V(x4, x5, x6)", special, p.special.L ? p.special.L->to_string() : "none");

  auto A = perazzo_matrix_A(f, 3);
  auto expected_A = parse_matrix("[[2*x1, x0, x2], [x0, 0, x3], [x2, x3, 0]]", 7);
  c.expect("A = [[2x1, x0, x2], [x0, 0, x3], [x2, x3, 0]]", A.A == expected_A, print_matrix(A.A));
  c.expect("det A = 2*x0*x2*x3 - 2*x1*x3^2", A.det == poly("2*x0*x2*x3 - 2*x1*x3^2", 7), print_poly(A.det));
  bool det_on_zstar = !p.zstar.samples.empty();
  for (const auto& z : p.zstar.samples)
    det_on_zstar = det_on_zstar && sgn(A.det.evaluate(RationalField{}, std::span<const Rational>(z))) == 0;
  c.expect("det A vanishes on Z* samples", det_on_zstar, std::to_string(p.zstar.samples.size()) + " samples");
  c.expect("Z* fit ~ x0*x2 - x1*x3", p.zstar.fit && same_up_to_scalar(*p.zstar.fit, poly("x0*x2 - x1*x3", 7)),
           p.zstar.fit ? print_poly(*p.zstar.fit) : "none");
  c.expect("fit degree 2 < sigma = 3", p.zstar.fit_degree == 2, std::to_string(p.zstar.fit_degree));
}

// Criterion 4.
void concatenation(Checks& c, std::uint64_t seed) {
  auto f = family("concat");
  SamplingOptions opts;
  opts.seed = seed;
  auto vertex = vertex_space(f);
  c.expect("not a cone", vertex.empty(), vertex.to_string());
  auto rel = find_relations(f, 3, opts);
  const bool dim2 = rel.degree == 2 && rel.basis.size() == 2;
  c.expect("degree-2 relation space of dimension 2", dim2,
           "degree " + std::to_string(rel.degree) + ", " + dual_list(rel.basis));
  c.expect("contains y0*y2 - y1^2", dim2 && in_span(rel.basis, poly("x0*x2 - x1^2", 8)), dual_list(rel.basis));
  c.expect("contains y2*y6 - y5^2", dim2 && in_span(rel.basis, poly("x2*x6 - x5^2", 8)), dual_list(rel.basis));
  auto rank = generic_rank(hessian_matrix(f), opts);
  c.expect("generic Hessian rank 6 (codim Z = 2)", rank.claimed_rank == 6,
           std::to_string(rank.claimed_rank) + " [" + bound_str(rank.log2_failure_bound) + "]");
}

// Criterion 5.
void juxtapositions(Checks& c, std::uint64_t seed) {
  SamplingOptions opts;
  opts.seed = seed;
  FamilySpec s;
  s.family = "juxtapose";
  auto f2 = generate(s);
  c.expect("P^9 block form",
           f2 == poly("x0*x3^2 + x1*x3*x4 + x2*x4^2 + x5*x8^2 + x6*x8*x9 + x7*x9^2", 10), print_poly(f2));
  s.copies = 3;
  auto f3 = generate(s);

  struct Case {
    std::string name;
    MultiPoly f;
    std::vector<std::string> relations;
  };
  std::vector<Case> cases = {
      {"P^9", f2, {"x0*x2 - x1^2", "x5*x7 - x6^2"}},
      {"triple", f3, {"x0*x2 - x1^2", "x5*x7 - x6^2", "x10*x12 - x11^2"}},
  };
  for (const auto& k : cases) {
    auto h = hess_vanishes(k.f, HessMode::Symbolic, opts);
    c.expect(k.name + " hess = 0", h.vanishes && h.certainty == Certainty::ExactSymbolic, hess_str(h));
    auto vertex = vertex_space(k.f);
    c.expect(k.name + " not a cone", vertex.empty(), vertex.to_string());
    auto rel = find_relations(k.f, 2, opts);
    for (const auto& g : k.relations) {
      auto want = poly(g, k.f.nvars());
      c.expect(k.name + " relation " + print_dual(want), rel.degree == 2 && in_span(rel.basis, want),
               dual_list(rel.basis));
    }
  }
}

// Criterion 6.
void determinantal_section(Checks& c, std::uint64_t seed) {
  auto f = family("det3_section");
  RVector diag(9, Rational(0));
  diag[0] = 1;
  diag[4] = 1;
  auto section = tangent_section(family("det3"), diag);
  c.expect("generate(det3_section) = tangent_section(det3, diag(1,1,0))", section == f, print_poly(section));

  auto r = classify(f, analysis_options(seed));
  const bool rel_ok = r.relations && r.relations->degree == 2 && r.relations->basis.size() == 1 &&
                      same_up_to_scalar(r.relations->basis[0], poly("x0*x4 - x1*x3", 8));
  c.expect("relation y0*y4 - y1*y3", rel_ok, r.relations ? dual_list(r.relations->basis) : "n/a");
  c.expect("generic Hessian rank 7 (dim Z = 6)", r.hess.rank.claimed_rank == 7,
           std::to_string(r.hess.rank.claimed_rank));
  if (!r.perazzo) {
    c.expect("Perazzo invariants computed", false, r.summary);
    return;
  }
  const auto& p = *r.perazzo;
  c.expect("fibers P^5", p.fiber_dim == 5, "P^" + std::to_string(p.fiber_dim));
  bool all3 = !p.special.pairwise_dims.empty();
  for (int d : p.special.pairwise_dims) all3 = all3 && d == 3;
  std::string dims;
  for (int d : p.special.pairwise_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  c.expect("pairwise fiber intersections are P^3", all3, "dims " + dims);
  // Every Sing Q_w contains V(x2, x5, x6, x7), so two general fibers always meet in that same P^3,
  // one dimension short of the P^(N - mu - 1) a Special cubic would need.
  bool fixed_meet = !p.special.pairwise_dims.empty();
  std::vector<LinearSubspace> fibers;
  for (std::uint64_t s = 0; s < 3; ++s)
    fibers.push_back(perazzo_fiber(f, generic_point(f, 7, derive_seed(seed, 0x6636, s))));
  for (std::size_t a = 0; a < fibers.size(); ++a)
    for (std::size_t b = a + 1; b < fibers.size(); ++b)
      fixed_meet = fixed_meet && fibers[a].intersect(fibers[b]) == LinearSubspace::coordinate(8, {2, 5, 6, 7});
  c.expect("fibers meet in the P^3 V(x2, x5, x6, x7), not Special", fixed_meet && !p.special.special,
           "intersections vary " + yes_no(p.special.intersections_vary) + ", special " + yes_no(p.special.special));
  c.expect("Z* span V(x2, x5, x6, x7)", p.zstar.span == LinearSubspace::coordinate(8, {2, 5, 6, 7}),
           p.zstar.span.to_string());
  c.expect("Z* fit ~ x0*x4 - x1*x3", p.zstar.fit && same_up_to_scalar(*p.zstar.fit, poly("x0*x4 - x1*x3", 8)),
           p.zstar.fit ? print_poly(*p.zstar.fit) : "none");

  // w = (a0:a1:0:a3:a4:0:0:0) with a0*a4 = a1*a3.
  const long a0 = 1, a1 = 2, a3 = 3, a4 = 6;
  RVector w{a0, a1, 0, a3, a4, 0, 0, 0};
  auto hw = hessian_matrix(f).evaluate(RationalField{}, std::span<const Rational>(w));
  Matrix<Rational> shown(8, 8, Rational(0));
  auto put = [&](std::size_t i, std::size_t j, long v) { shown(i, j) = shown(j, i) = v; };
  put(2, 6, -a4);
  put(2, 7, a3);
  put(5, 6, a1);
  put(5, 7, -a0);
  c.expect("Hess(w) is the displayed rank-2 matrix", hw == shown && rank_kernel(hw).rank == 2,
           "rank " + std::to_string(rank_kernel(hw).rank));
  RVector e1(8, 0), e2(8, 0);
  e1[6] = -a4;
  e1[7] = a3;
  e2[2] = -a4;
  e2[5] = a1;
  auto image = perazzo_image(f, w);
  c.expect("perazzo_image(w) = V(-a4*x6 + a3*x7, -a4*x2 + a1*x5)",
           image == LinearSubspace::from_equations(8, {e1, e2}), image.to_string());
  c.expect("rank_mod_f = 6 (dim X* = 4)", r.rank_mod_f && r.rank_mod_f->claimed_rank == 6,
           r.rank_mod_f ? std::to_string(r.rank_mod_f->claimed_rank) : "n/a");
}

// Criterion 7.
void pfaffian_section(Checks& c, std::uint64_t seed) {
  auto f = tangent_section(family("pf6"), pf6_rank4_point());
  c.expect("tangent_section(pf6, rank-4 point) = generate(pf6_section)", f == family("pf6_section"),
           std::to_string(f.nvars()) + " variables");
  SamplingOptions opts;
  opts.seed = seed;
  auto rank = generic_rank(hessian_matrix(f), opts);
  c.expect("generic Hessian rank 13, bound < 2^-40", rank.claimed_rank == 13 && rank.log2_failure_bound < -40,
           std::to_string(rank.claimed_rank) + " [" + bound_str(rank.log2_failure_bound) + ", " +
               std::to_string(rank.primes_used.size()) + " primes]");
  auto rf = rank_mod_f(f, opts);
  c.expect("rank_mod_f = 10, bound < 2^-40", rf.claimed_rank == 10 && rf.log2_failure_bound < -40,
           std::to_string(rf.claimed_rank) + " [" + bound_str(rf.log2_failure_bound) + ", " +
               std::to_string(rf.primes_used.size()) + " primes]");
}

// Criterion 8.
void property_suites(Checks& c, std::uint64_t seed) {
  for (const auto& s : run_property_suites(seed)) {
    std::ostringstream obs;
    obs << s.cases << " cases, " << s.failures << " failures, " << std::fixed << std::setprecision(2) << s.seconds
        << " s";
    if (!s.first_failure.empty()) obs << ", first: " << s.first_failure;
    c.expect(s.name, s.passed() && s.cases >= 100, obs.str());
  }
}

// Criterion 9.
void classification(Checks& c, std::uint64_t seed) {
  auto run = [&](const std::string& what, const MultiPoly& f, const std::string& label) {
    auto r = classify(f, analysis_options(seed));
    bool checks_hold = true;
    for (const auto& k : r.checks) checks_hold = checks_hold && k.holds;
    c.expect(what + " -> " + label, r.label == label && checks_hold, r.summary);
  };
  FamilySpec mu1;
  mu1.family = "mu1";
  mu1.N = 6;
  mu1.seed = seed;
  run("mu1(6, generic D)", generate(mu1), "P6-dimZ*1");
  run("exdet", family("exdet"), "P6-dimZ*2-quadric-or-cubic-surface");
  mu1.zero_D = true;
  run("mu1(6, D = 0)", generate(mu1), "cone");
}

struct Criterion {
  int id;
  std::string name;
  std::vector<std::string> tags;
  std::string expected;
  double budget;
  bool slow;
  std::function<void(Checks&, std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Bourgain-Sacksteder cubic in P^4", {"bs", "p4"},
       "hess=0 exact, not a cone, codim Z=1, relations {y0*y2 - y1^2}, mu=1, Special L=V(x3, x4), "
       "fit 4*x0*x2 - x1^2, rank_mod_f=4",
       1, false, bourgain_sacksteder},
      {2, "control cubic with nonvanishing hessian", {"singp2", "control"}, "hess != 0 exact", 1, false, control},
      {3, "determinantal example in P^6", {"exdet", "p6"},
       "hess=0, mu=2, fibers P^4, L=V(x4, x5, x6), A and det A exact, fit x0*x2 - x1*x3 of degree 2 < 3", 2,
       false, determinantal_p6},
      {4, "concatenation in P^7", {"concat", "p7"},
       "not a cone, 2-dim degree-2 relations containing y0*y2 - y1^2 and y2*y6 - y5^2, codim Z=2", 2, false,
       concatenation},
      {5, "juxtapositions", {"juxtapose", "p9"}, "hess=0, not cones, block relations found", 3, false, juxtapositions},
      {6, "determinantal tangent section in P^7", {"det3_section", "det3", "p7"},
       "relation y0*y4 - y1*y3, rank 7, fibers P^5 meeting pairwise in a P^3 (not Special), Z* = V(x0*x4 - x1*x3) in "
       "V(x2, x5, x6, x7), image at w as displayed, rank_mod_f=6",
       5, false, determinantal_section},
      {7, "Pfaffian tangent section in P^13", {"pf6", "pfaffian", "slow"},
       "generic Hessian rank 13, rank_mod_f 10, failure bounds < 2^-40", 600, true, pfaffian_section},
      {8, "property suites", {"properties"}, "every suite passes with at least 100 cases", 30, false,
       property_suites},
      {9, "classification of the P^6 regimes", {"classify", "p6"},
       "P6-dimZ*1, P6-dimZ*2-quadric-or-cubic-surface, cone", 3, false, classification},
  };
  return all;
}

bool selected(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (c.name.find(filter) != std::string::npos || std::to_string(c.id) == filter) return true;
  for (const auto& t : c.tags)
    if (t.find(filter) != std::string::npos) return true;
  return false;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!selected(c, opts.filter)) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.tags = c.tags;
    r.expected = c.expected;
    r.budget_seconds = c.budget;
    if (c.slow && !opts.include_slow) {
      r.skipped = true;
      r.actual = "skipped (needs --include-slow)";
      out.push_back(std::move(r));
      continue;
    }
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(checks, opts.seed);
    } catch (const Error& e) {
      checks.expect("no error", false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << r.seconds << " s";
    checks.expect("within " + std::to_string(static_cast<int>(c.budget)) + " s", r.seconds < c.budget, t.str());
    r.actual = checks.actual();
    r.failures = checks.failures();
    r.passed = r.failures.empty();
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.skipped && !r.passed) return false;
  return true;
}

std::string to_table(const std::vector<CriterionResult>& results) {
  std::ostringstream s;
  for (const auto& r : results) {
    const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    s << std::setw(2) << r.id << "  " << status << "  " << r.name;
    if (!r.skipped) s << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    s << "\n    expected: " << r.expected << "\n    actual:   " << r.actual << "\n";
    for (const auto& f : r.failures) s << "    failed:   " << f << "\n";
  }
  return s.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"tags", r.tags},
                   {"status", r.skipped ? "skipped" : r.passed ? "pass" : "fail"},
                   {"expected", r.expected},
                   {"actual", r.actual},
                   {"failures", r.failures},
                   {"budget_seconds", r.budget_seconds},
                   {"seconds", r.seconds}});
  }
  return {{"criteria", arr}, {"all_passed", all_passed(results)}};
}

}  // namespace vhess
