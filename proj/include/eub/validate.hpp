#pragma once

#include <cstdint>
#include <string>

#include "eub/parallel.hpp"

namespace eub {

struct ValidateOptions {
  int count = 100;        // random instances
  int dim_a = 2;          // measured-side dimension
  int dim_b = 0;          // memory dimension; 0 means same as dim_a
  int measurements = 2;   // bases per instance (>= 2)
  std::uint64_t seed = 1;
  par::Exec exec = par::default_exec();
  // On failure the worst instance is dumped as <prefix>_state.json and
  // <prefix>_basis_<m>.json; empty prefix disables the dump.
  std::string dump_prefix = "validate_worst";
};

struct ValidateSummary {
  int instances = 0;
  long long checks = 0;       // individual inequalities/identities evaluated
  int violations = 0;         // instances with at least one failure
  double worst = 0.0;         // largest violation magnitude seen
  std::string worst_check;    // which inequality produced it
  long long worst_instance = -1;
  bool ok() const { return violations == 0; }
};

// Randomized self-check over seeded instances (states from normalized
// Gaussian amplitude matrices, bases from QR-orthonormalized Gaussian
// matrices with a positive-real diagonal phase fix). Per instance it checks
// the overlap-bound ordering, the sign and range constraints on the
// correlation measures, every memory-assisted sum against every bound it
// must dominate, the dual-route conditional entropies, the majorization
// domination property, and (for >= 2 bases) the chain bound under its best
// ordering. Instances run independently; counting is order-free and the
// worst case is selected by (magnitude, instance index), so the summary is
// deterministic for a fixed seed.
ValidateSummary run_validation(const ValidateOptions& options);

}  // namespace eub
