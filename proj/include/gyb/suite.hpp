#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gyb/invariant.hpp"

namespace gyb {

struct SuiteOptions {
  int samples = 100;
  int min_strands = 1;
  int max_strands = 4;
  std::size_t max_len = 12;
  int conjugations_per_braid = 2;
  std::uint64_t seed = 1;
  RepOptions rep;
};

struct RelationResult {
  std::string relation;
  int samples = 0;
  double max_residual = 0.0;
  /// Braid (or first braid of a pair) with the largest residual.
  std::optional<BraidWord> worst;
};

/// Runs every relation that applies to the enhancement: Markov invariance,
/// the skein or quartic relation of the catalog family, projective and T̃
/// multiplicativity, and (for type3/r232) the cross-operator coincidence.
/// Skein relations are only known for catalog operators; custom operators
/// get Markov and multiplicativity only.
std::vector<RelationResult> run_relation_suite(const EgybOperator& s, const SuiteOptions& options);

}  // namespace gyb
