// vhess: analyze cubic forms for vanishing Hessian and run the regression suite.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vhess/analysis.hpp"
#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/regression.hpp"
#include "vhess/report.hpp"

namespace {

enum Exit { kOk = 0, kCriterionFailed = 1, kParseError = 2, kGenericityError = 3, kUsage = 4 };

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t prime = vhess::kMersenne61;
  std::size_t trials = 8;
  bool json = false;
  int max_degree = 3;

  vhess::SamplingOptions sampling() const {
    vhess::SamplingOptions s;
    s.seed = seed;
    s.trials = trials;
    s.primes = {prime};
    if (prime != vhess::kMersenne31) s.primes.push_back(vhess::kMersenne31);
    return s;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();
  cmd->add_option("--prime", c.prime, "Primary prime modulus")->capture_default_str();
  cmd->add_option("--trials", c.trials, "Random evaluations per prime")->capture_default_str();
  cmd->add_flag("--json", c.json, "Emit JSON");
}

int analyze(const std::string& file, const Common& c, bool timings) {
  auto parsed = vhess::read_poly_file(file);
  vhess::AnalysisOptions opts;
  opts.sampling = c.sampling();
  opts.max_degree = c.max_degree;
  auto report = vhess::classify(parsed.poly, opts);
  if (c.json) {
    std::cout << vhess::to_json(report, timings).dump(2) << "\n";
  } else {
    std::cout << vhess::to_text(report, timings);
  }
  return report.genericity_failure ? kGenericityError : kOk;
}

int relations(const std::string& file, const Common& c) {
  auto parsed = vhess::read_poly_file(file);
  auto rel = vhess::find_relations(parsed.poly, c.max_degree, c.sampling());
  if (c.json) {
    std::cout << vhess::to_json(rel).dump(2) << "\n";
  } else if (rel.basis.empty()) {
    std::cout << "none found up to degree " << rel.searched_up_to << "\n";
  } else {
    for (const auto& g : rel.basis) std::cout << vhess::print_dual(g) << "\n";
  }
  return kOk;
}

int generate(const vhess::FamilySpec& spec, const std::string& out) {
  auto f = vhess::generate(spec);
  std::string text = "nvars: " + std::to_string(f.nvars()) + "\n" + vhess::print_poly(f) + "\n";
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream os(out);
  if (!os) throw vhess::UsageError("cannot write " + out);
  os << text;
  return kOk;
}

int verify(const vhess::SuiteOptions& opts, bool json) {
  auto results = vhess::run_acceptance(opts);
  if (json) {
    std::cout << vhess::to_json(results).dump(2) << "\n";
  } else {
    std::cout << vhess::to_table(results);
  }
  return vhess::all_passed(results) ? kOk : kCriterionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing-Hessian analysis of projective hypersurfaces"};
  app.require_subcommand(1);
  Common common;

  std::string file;
  bool timings = false;
  auto* an = app.add_subcommand("analyze", "Full invariant report for one polynomial file");
  an->add_option("file", file, "Polynomial file")->required();
  add_common(an, common);
  an->add_option("--max-degree", common.max_degree, "Largest relation degree searched")->capture_default_str();
  an->add_flag("--timings", timings, "Include per-stage wall-clock times");

  auto* rel = app.add_subcommand("relations", "Lowest-degree relations among the partials");
  rel->add_option("file", file, "Polynomial file")->required();
  add_common(rel, common);
  rel->add_option("--max-degree", common.max_degree, "Largest relation degree searched")->capture_default_str();

  vhess::FamilySpec spec;
  std::string out;
  auto* gen = app.add_subcommand("generate", "Write a member of an example family");
  gen->add_option("family", spec.family, "Family name")->required()->check(CLI::IsMember(vhess::family_names()));
  gen->add_option("--N", spec.N, "Ambient dimension N");
  gen->add_option("--tau", spec.tau, "tau (classe1, simplified)");
  gen->add_option("--sigma", spec.tau, "sigma (canSPCH)");
  gen->add_option("--copies", spec.copies, "Number of blocks (juxtapose)")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Seed for random coefficients")->capture_default_str();
  gen->add_flag("--zero-D", spec.zero_D, "Omit the cubic D in random families");
  std::vector<std::int64_t> coeffs;
  gen->add_option("--coefficients", coeffs, "Explicit coefficients, used in order")->delimiter(',');
  gen->add_option("--out", out, "Output file (stdout when absent)");

  vhess::SuiteOptions suite;
  bool suite_json = false;
  auto* ver = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  ver->add_option("--filter", suite.filter, "Only criteria whose name or tags contain this text");
  ver->add_flag("--include-slow", suite.include_slow, "Also run the slow Pfaffian criterion");
  ver->add_option("--seed", suite.seed, "Seed")->capture_default_str();
  ver->add_flag("--json", suite_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*an) return analyze(file, common, timings);
    if (*rel) return relations(file, common);
    if (*gen) {
      if (!coeffs.empty()) spec.coefficients = coeffs;
      return generate(spec, out);
    }
    if (*ver) return verify(suite, suite_json);
  } catch (const vhess::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const vhess::GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kGenericityError;
  } catch (const vhess::SamplingError& e) {
    std::cerr << "sampling failure: " << e.what() << "\n";
    return kGenericityError;
  } catch (const vhess::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
