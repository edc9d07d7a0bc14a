#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vhess/hessian.hpp"
#include "vhess/perazzo.hpp"
#include "vhess/polar.hpp"

namespace vhess {

enum class HessPolicy { Auto, Symbolic, MonteCarlo };

struct AnalysisOptions {
  SamplingOptions sampling;
  int max_degree = 3;
  /// Auto: symbolic when the Hessian is structurally singular or has at most 12 rows.
  HessPolicy hess_policy = HessPolicy::Auto;
  bool rank_mod_f = true;
};

struct ConsistencyCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

/// Everything `classify` learned about one form. Optional members are absent when the
/// pipeline stopped before computing them.
struct AnalysisReport {
  std::string polynomial;
  std::size_t nvars = 0;
  int degree = -1;
  bool homogeneous = true;
  SamplingOptions sampling;

  HessVanishing hess;
  std::optional<bool> is_cone;
  std::optional<LinearSubspace> vertex;
  std::optional<int> codimZ;
  std::optional<RelationBasis> relations;
  std::optional<PerazzoProfile> perazzo;
  std::optional<RankCertificate> rank_mod_f;

  std::vector<ConsistencyCheck> checks;
  std::string label;
  std::string summary;
  std::vector<std::string> notes;
  std::vector<StageTiming> timings;
  bool genericity_failure = false;

  int N() const { return static_cast<int>(nvars) - 1; }
};

/// Runs hess -> cone -> codim Z -> relations -> Perazzo invariants -> rank mod f, stopping early
/// for non-vanishing Hessians and cones, and labels the result.
AnalysisReport classify(const MultiPoly& f, const AnalysisOptions& opts = {});

}  // namespace vhess
