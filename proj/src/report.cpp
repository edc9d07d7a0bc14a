#include "vhess/report.hpp"

#include <cmath>
#include <sstream>

#include "vhess/parse.hpp"

namespace vhess {

using nlohmann::json;

namespace {

json bound(double log2_bound) {
  if (std::isinf(log2_bound) && log2_bound < 0) return nullptr;
  return log2_bound;
}

json tagged(json value, Certainty c, double log2_bound) {
  return json{{"value", std::move(value)}, {"certainty", to_string(c)}, {"log2_failure_bound", bound(log2_bound)}};
}

/// Perazzo invariants are exact at sampled points; only the genericity of the points is random,
/// controlled by the seed-vote protocol rather than a degree bound.
json sampled(json value) {
  return json{{"value", std::move(value)}, {"certainty", "monte-carlo"}, {"log2_failure_bound", nullptr}};
}

json vec_json(const RVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string fmt_bound(double b) {
  if (std::isinf(b) && b < 0) return "certain";
  std::ostringstream s;
  s << "failure <= 2^" << static_cast<long>(std::floor(b));
  return s.str();
}

}  // namespace

std::string print_dual(const MultiPoly& g) {
  std::string s = print_poly(g);
  for (auto& c : s)
    if (c == 'x') c = 'y';
  return s;
}

json to_json(const RankCertificate& c) {
  json w = json::array();
  for (auto x : c.witness_point) w.push_back(x);
  return json{{"value", c.claimed_rank},
              {"certainty", to_string(c.certainty)},
              {"log2_failure_bound", bound(c.log2_failure_bound)},
              {"witness_point", w},
              {"witness_prime", c.witness_prime},
              {"trials", c.trials},
              {"primes", c.primes_used},
              {"seed", c.seed}};
}

json to_json(const RelationBasis& r) {
  json basis = json::array();
  for (const auto& g : r.basis) basis.push_back(print_dual(g));
  return json{{"degree", r.degree},
              {"minimal", r.minimal},
              {"searched_up_to", r.searched_up_to},
              {"basis", basis},
              {"certainty", "exact-symbolic"}};
}

json to_json(const LinearSubspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vec_json(v));
  return json{{"text", s.to_string()}, {"dim", s.dim()}, {"basis", basis}};
}

json to_json(const AnalysisReport& r, bool include_timings) {
  json j;
  j["input"] = {{"polynomial", r.polynomial},
                {"nvars", r.nvars},
                {"N", r.N()},
                {"degree", r.degree},
                {"homogeneous", r.homogeneous}};
  j["seed"] = r.sampling.seed;
  j["trials"] = r.sampling.trials;
  j["primes"] = r.sampling.primes;
  j["hess_vanishes"] = tagged(r.hess.vanishes, r.hess.certainty, r.hess.log2_failure_bound);
  j["generic_rank"] = to_json(r.hess.rank);
  if (r.is_cone) {
    j["is_cone"] = tagged(*r.is_cone, Certainty::ExactSymbolic, -INFINITY);
    j["vertex"] = to_json(*r.vertex);
  }
  if (r.codimZ) {
    // A vanishing determinant caps the rank at N; a witness of rank N then makes codim Z = 1 exact.
    const bool exact = r.hess.certainty == Certainty::ExactSymbolic && r.hess.vanishes &&
                       r.hess.rank.claimed_rank + 1 == r.nvars;
    j["codimZ"] = exact ? tagged(*r.codimZ, Certainty::ExactSymbolic, -INFINITY)
                        : tagged(*r.codimZ, r.hess.rank.certainty, r.hess.rank.log2_failure_bound);
  }
  if (r.relations) j["relations"] = to_json(*r.relations);
  if (r.perazzo) {
    const auto& p = *r.perazzo;
    j["mu"] = sampled(p.mu);
    j["fiber_dim"] = sampled(p.fiber_dim);
    j["fiber_dims_by_seed"] = p.fiber_dims;
    j["special"] = sampled(p.special.special);
    j["pairwise_fiber_intersection_dims"] = p.special.pairwise_dims;
    j["pairwise_intersections_vary"] = p.special.intersections_vary;
    j["L"] = p.special.L ? to_json(*p.special.L) : json(nullptr);
    j["zstar"] = {{"span", to_json(p.zstar.span)},
                  {"fit", p.zstar.fit ? json(print_poly(*p.zstar.fit)) : json(nullptr)},
                  {"fit_degree", p.zstar.fit_degree},
                  {"dim", sampled(p.zstar.dim)},
                  {"samples", p.zstar.samples.size()}};
  }
  if (r.rank_mod_f) {
    j["rank_mod_f"] = to_json(*r.rank_mod_f);
    j["dim_dual"] = tagged(static_cast<int>(r.rank_mod_f->claimed_rank) - 2, r.rank_mod_f->certainty,
                           r.rank_mod_f->log2_failure_bound);
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  j["checks"] = checks;
  j["label"] = r.label;
  j["summary"] = r.summary;
  j["notes"] = r.notes;
  j["genericity_failure"] = r.genericity_failure;
  if (include_timings) {
    json t = json::object();
    for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
    j["timings_ms"] = t;
  }
  return j;
}

std::string to_text(const AnalysisReport& r, bool include_timings) {
  std::ostringstream s;
  s << "f = " << r.polynomial << "\n";
  s << "N = " << r.N() << ", degree " << r.degree << (r.homogeneous ? "" : " (not homogeneous)") << "\n";
  s << "seed " << r.sampling.seed << ", " << r.sampling.trials << " trials per prime\n";
  s << "hess vanishes: " << (r.hess.vanishes ? "yes" : "no") << " [" << to_string(r.hess.certainty) << ", "
    << fmt_bound(r.hess.log2_failure_bound) << "]\n";
  s << "generic Hessian rank: " << r.hess.rank.claimed_rank << " [" << fmt_bound(r.hess.rank.log2_failure_bound)
    << "]\n";
  if (r.is_cone) s << "cone: " << (*r.is_cone ? "yes, vertex " + r.vertex->to_string() : std::string("no")) << "\n";
  if (r.codimZ) s << "codim Z = " << *r.codimZ << "\n";
  if (r.relations) {
    if (r.relations->basis.empty()) {
      s << "relations: none found up to degree " << r.relations->searched_up_to << "\n";
    } else {
      s << "relations of degree " << r.relations->degree << ":\n";
      for (const auto& g : r.relations->basis) s << "  " << print_dual(g) << "\n";
    }
  }
  if (r.perazzo) {
    const auto& p = *r.perazzo;
    s << "mu = " << p.mu << ", general fiber P^" << p.fiber_dim << "\n";
    s << "special: " << (p.special.special ? "yes, L = " + p.special.L->to_string() : std::string("no")) << "\n";
    s << "Z* span " << p.zstar.span.to_string() << ", dim Z* = " << p.zstar.dim;
    if (p.zstar.fit) s << ", fit " << print_poly(*p.zstar.fit);
    s << "\n";
  }
  if (r.rank_mod_f) {
    s << "rank mod f = " << r.rank_mod_f->claimed_rank << " (dim X* = "
      << static_cast<int>(r.rank_mod_f->claimed_rank) - 2 << ") [" << fmt_bound(r.rank_mod_f->log2_failure_bound)
      << "]\n";
  }
  for (const auto& c : r.checks) s << "check " << (c.holds ? "ok  " : "FAIL") << " " << c.name << "\n";
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  if (include_timings)
    for (const auto& t : r.timings) s << "time " << t.stage << ": " << t.milliseconds << " ms\n";
  s << "label: " << r.summary << "\n";
  return s.str();
}

}  // namespace vhess
