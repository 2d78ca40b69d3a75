#pragma once

#include <cstdint>

#include "subcrit/instances.hpp"

namespace subcrit {

enum class ModelKind { kFormula, kHypergraph };

/// The three equivalent density parametrizations of the random models:
/// p = alpha n^{-(r-1)}, and c n is the expected number of clauses (edges).
struct ModelParams {
  ModelKind kind = ModelKind::kFormula;
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  double alpha = 0.0;
  double p = 0.0;
  double c = 0.0;

  /// Number of candidate clauses (2^r C(n,r)) or edges (C(n,r)).
  double candidates() const;
};

ModelParams params_from_alpha(std::uint32_t n, std::uint32_t r, double alpha,
                              ModelKind kind);

using Seed = std::uint64_t;

/// Independent stream seed for item `index` of a run seeded with `seed`.
Seed derive_seed(Seed seed, std::uint64_t index);

enum class SamplerMode {
  /// One uniform per candidate in lexicographic order. Samples at p1 <= p2
  /// drawn with the same seed are nested.
  kCoupled,
  /// Geometric skipping between present candidates; cost proportional to the
  /// number of clauses drawn.
  kSkip,
};

Formula sample_formula(const ModelParams& params, Seed seed,
                       SamplerMode mode = SamplerMode::kCoupled);
Hypergraph sample_hypergraph(const ModelParams& params, Seed seed,
                             SamplerMode mode = SamplerMode::kCoupled);

struct Threshold {
  double alpha = 0.0;  // minimum value
  double y = 0.0;      // minimizer
};

/// Objective whose minimum over y > 0 is the pure-literal threshold.
double pure_literal_objective(std::uint32_t r, double y);

/// Golden-section minimization of pure_literal_objective on (1e-6, 50).
Threshold pure_literal_threshold(std::uint32_t r);

}  // namespace subcrit
