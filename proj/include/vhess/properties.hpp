#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vhess/poly.hpp"

namespace vhess {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool passed() const { return failures == 0 && cases > 0; }
};

/// Named forms with vanishing Hessian that are not cones: the fixed examples plus seeded
/// instances of the canonical families.
struct CorpusEntry {
  std::string name;
  MultiPoly f;
  std::size_t generic_rank = 0;
};
std::vector<CorpusEntry> vanishing_corpus(std::uint64_t seed, std::size_t random_instances);

/// Each suite runs at least `min_cases` seeded cases.
PropertyResult check_reciprocity(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_euler(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_gn_identities(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_partial2f(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_hyperplane_restriction(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_pencil_span(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_classe1(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_simplified_converse(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_fiber_linearity(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_dimension_bounds(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_zstar_singular(std::uint64_t seed, std::size_t min_cases = 100);
PropertyResult check_secant_chords(std::uint64_t seed, std::size_t min_cases = 100);

std::vector<PropertyResult> run_property_suites(std::uint64_t seed);

}  // namespace vhess
