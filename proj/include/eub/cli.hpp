#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eub/validate.hpp"

namespace eub::cli {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;         // success, relations satisfied
inline constexpr int exit_violation = 1;  // a checked relation failed
inline constexpr int exit_invalid = 2;    // input validation failure
inline constexpr int exit_dims = 3;       // dimension mismatch

struct BoundsOptions {
  std::string state_path;
  std::vector<std::string> basis_paths;  // 2 -> full report, >= 3 -> chain report
  char memory_side = 'B';                // 'A' or 'B'
  std::vector<double> lambdas;           // empty -> {0, 0.25, 0.5, 0.75, 1}
  std::string out_path;                  // empty -> stdout
};
int cmd_bounds(const BoundsOptions& opt);

struct SweepOptions {
  std::string scenario;
  int steps = 50;   // K (grid side for fig4)
  std::string out_path;
  bool serial = false;
};
int cmd_sweep(const SweepOptions& opt);

struct WitnessOptions {
  std::string state_path;
  std::vector<std::string> basis_paths;
  int split_x = 0;  // measured system factorization dx x dy
  int split_y = 0;
  int budget = 200;
  std::uint64_t seed = 1;
  std::string out_path;
  bool serial = false;
};
int cmd_witness(const WitnessOptions& opt);

struct ValidateCmdOptions {
  ValidateOptions inner;
};
int cmd_validate(const ValidateCmdOptions& opt);

}  // namespace eub::cli
