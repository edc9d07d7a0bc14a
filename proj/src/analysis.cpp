#include "vhess/analysis.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "vhess/parse.hpp"

namespace vhess {

namespace {

class StageRunner {
 public:
  explicit StageRunner(AnalysisReport& report) : report_(report) {}

  /// Runs one stage, recording its time. Sampling trouble is recorded as a note and stops
  /// the pipeline; other errors propagate.
  bool run(const std::string& name, const std::function<void()>& body) {
    if (stopped_) return false;
    const auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const GenericityError& e) {
      fail(name, e.what());
    } catch (const SamplingError& e) {
      fail(name, e.what());
    } catch (const DegenerateError& e) {
      fail(name, e.what());
    }
    const auto end = std::chrono::steady_clock::now();
    report_.timings.push_back({name, std::chrono::duration<double, std::milli>(end - start).count()});
    return !stopped_;
  }

 private:
  void fail(const std::string& name, const std::string& what) {
    report_.notes.push_back(name + ": " + what);
    report_.genericity_failure = true;
    stopped_ = true;
  }

  AnalysisReport& report_;
  bool stopped_ = false;
};

void add_check(AnalysisReport& r, std::string name, bool holds, std::string detail) {
  r.checks.push_back({std::move(name), holds, std::move(detail)});
}

bool use_symbolic(const MultiPoly& f, HessPolicy policy) {
  if (policy == HessPolicy::Symbolic) return true;
  if (policy == HessPolicy::MonteCarlo) return false;
  if (f.nvars() <= 12) return true;
  auto h = hessian_matrix(f);
  return structural_rank(h) < h.rows();
}

void label_profile(AnalysisReport& r) {
  const auto& p = *r.perazzo;
  const int N = r.N();
  const int dimz = p.zstar.dim;
  const bool conic = p.zstar.fit && p.zstar.fit_degree == 2 && dimz == 1;
  std::ostringstream s;
  s << "vanishing hessian, not a cone, codim Z=" << p.codimZ << ", \xce\xbc=" << p.mu << ", "
    << (p.special.special ? "Special" : "not Special") << ", dim Z*=" << dimz;
  if (p.zstar.fit) s << ", Z* of degree " << p.zstar.fit_degree << " in " << p.zstar.span.to_string();

  auto expect = [&](const std::string& name, bool holds) { add_check(r, name, holds, s.str()); };
  if (N <= 3) {
    r.label = "inconsistent";
    r.notes.push_back("a non-cone cubic with vanishing hessian cannot exist for N <= 3");
    expect("no vanishing-hessian non-cone for N <= 3", false);
  } else if (N == 4) {
    r.label = "P4-unique";
    expect("P4 profile: codim Z=1, mu=1, Special, Z* a conic",
           p.codimZ == 1 && p.mu == 1 && p.special.special && conic);
  } else if (N == 5) {
    r.label = "P5-special-conic";
    expect("P5 profile: codim Z=1, mu=1, Special, Z* a conic",
           p.codimZ == 1 && p.mu == 1 && p.special.special && conic);
  } else if (N == 6 && dimz == 1) {
    r.label = "P6-dimZ*1";
    expect("P6 dim Z*=1 profile: codim Z=1, Special, Z* a conic", p.codimZ == 1 && p.special.special && conic);
  } else if (N == 6) {
    r.label = "P6-dimZ*2-quadric-or-cubic-surface";
    const bool surface = dimz == 2 && p.zstar.fit && (p.zstar.fit_degree == 2 || p.zstar.fit_degree == 3) &&
                         p.zstar.span.dim() == 3;
    expect("P6 dim Z*=2 profile: codim Z=1, Special, Z* a quadric or cubic surface in P^3",
           p.codimZ == 1 && p.special.special && surface);
  } else {
    r.label = "profile";
  }
  r.summary = r.label + ": " + s.str();
}

}  // namespace

AnalysisReport classify(const MultiPoly& f, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.polynomial = print_poly(f);
  r.nvars = f.nvars();
  r.degree = f.degree();
  r.homogeneous = f.is_homogeneous();
  r.sampling = opts.sampling;
  if (!r.homogeneous) r.notes.push_back("input is not homogeneous");
  StageRunner stage(r);

  stage.run("hessian", [&] {
    r.hess = hess_vanishes(f, use_symbolic(f, opts.hess_policy) ? HessMode::Symbolic : HessMode::MonteCarlo,
                           opts.sampling);
  });
  if (!r.hess.vanishes) {
    r.label = "hess \xe2\x89\xa0 0";
    r.summary = r.label;
    return r;
  }

  stage.run("vertex", [&] {
    r.vertex = vertex_space(f);
    r.is_cone = !r.vertex->empty();
  });
  if (r.is_cone.value_or(false)) {
    r.label = "cone";
    r.summary = "cone with vertex " + r.vertex->to_string();
    return r;
  }
  r.codimZ = static_cast<int>(f.nvars()) - static_cast<int>(r.hess.rank.claimed_rank);

  stage.run("relations", [&] { r.relations = find_relations(f, opts.max_degree, opts.sampling); });

  if (r.degree != 3 || !r.homogeneous) {
    r.label = "profile";
    r.summary = "Perazzo invariants skipped: the form is not a cubic";
    r.notes.push_back(r.summary);
    return r;
  }

  const bool perazzo_ok = stage.run("perazzo", [&] {
    r.perazzo = perazzo_profile(f, r.hess.rank.claimed_rank, opts.sampling);
  });
  if (opts.rank_mod_f) stage.run("rank_mod_f", [&] { r.rank_mod_f = rank_mod_f(f, opts.sampling); });
  if (!perazzo_ok) {
    r.label = "genericity-failure";
    r.summary = r.label;
    return r;
  }

  const auto& p = *r.perazzo;
  const int N = r.N();
  const int dimz = p.zstar.dim;
  if (p.codimZ == 1) {
    add_check(r, "dim Z* <= (N-1)/2", 2 * dimz <= N - 1,
              "dim Z*=" + std::to_string(dimz) + ", N=" + std::to_string(N));
    add_check(r, "dim Z* = mu when codim Z = 1", dimz == p.mu,
              "dim Z*=" + std::to_string(dimz) + ", mu=" + std::to_string(p.mu));
  }
  add_check(r, "dim Z* <= codim Z - 1 + mu", dimz <= p.codimZ - 1 + p.mu,
            "dim Z*=" + std::to_string(dimz) + ", codim Z=" + std::to_string(p.codimZ) + ", mu=" + std::to_string(p.mu));
  add_check(r, "fiber dimension = N - mu", p.fiber_dim == N - p.mu, "fiber P^" + std::to_string(p.fiber_dim));
  if (p.special.special) {
    add_check(r, "Z* samples lie in L", p.special.zstar_in_L, p.special.L->to_string());
    if (!p.special.consistent) r.notes.push_back("Special verdict and Z* in L disagree");
  }
  label_profile(r);
  return r;
}

}  // namespace vhess
