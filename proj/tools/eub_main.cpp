#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eub/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds with quantum memory: reports, figure sweeps, "
               "an entanglement witness, and randomized self-checks."};
  app.require_subcommand(1);

  eub::cli::BoundsOptions bounds_opt;
  std::string memory_side = "B";
  auto* bounds = app.add_subcommand(
      "bounds", "Evaluate every bound and measure for a state and measurement set");
  bounds->add_option("--state", bounds_opt.state_path, "State file (JSON)")->required();
  bounds
      ->add_option("--basis", bounds_opt.basis_paths,
                   "Basis file (repeat; 2 give the full report, 3+ the chain report)")
      ->required();
  bounds
      ->add_option("--memory-side", memory_side,
                   "Which stored subsystem is the memory (measurements act on the other)")
      ->check(CLI::IsMember({"A", "B"}))
      ->capture_default_str();
  bounds->add_option("--lambda", bounds_opt.lambdas,
                     "Interpolation weights for the combined measure (default 0,.25,.5,.75,1)");
  bounds->add_option("--out", bounds_opt.out_path, "Write the report here instead of stdout");

  eub::cli::SweepOptions sweep_opt;
  int grid = 0;
  auto* sweep = app.add_subcommand("sweep", "Emit figure data for a named scenario as CSV");
  sweep
      ->add_option("--scenario", sweep_opt.scenario,
                   "One of: fig1, fig2, fig3, fig4, bell, horodecki, werner")
      ->required();
  sweep->add_option("--steps", sweep_opt.steps, "Number of grid points")
      ->capture_default_str();
  sweep->add_option("--grid", grid, "Grid side length (K x K surface scenarios; overrides --steps)");
  sweep->add_option("--out", sweep_opt.out_path, "Write CSV here instead of stdout");
  sweep->add_flag("--serial", sweep_opt.serial, "Force the serial reference path");

  eub::cli::WitnessOptions witness_opt;
  std::vector<int> split;
  auto* witness = app.add_subcommand(
      "witness", "Entanglement witness on a bipartite measured state (no external memory)");
  witness->add_option("--state", witness_opt.state_path, "State file (JSON)")->required();
  witness->add_option("--basis", witness_opt.basis_paths, "Basis file (repeat, 2+)")
      ->required();
  witness->add_option("--split", split, "Bipartition of the measured system: dx dy")
      ->expected(2)
      ->required();
  witness->add_option("--budget", witness_opt.budget, "Optimizer restarts per subset")
      ->capture_default_str();
  witness->add_option("--seed", witness_opt.seed, "Seed for the frame optimizer")
      ->capture_default_str();
  witness->add_option("--out", witness_opt.out_path, "Write the verdict here instead of stdout");
  witness->add_flag("--serial", witness_opt.serial, "Force the serial reference path");

  eub::cli::ValidateCmdOptions validate_opt;
  std::vector<int> dims_ab;
  bool validate_serial = false;
  auto* validate = app.add_subcommand(
      "validate", "Fuzz every relation and identity over seeded random instances");
  validate->add_option("--random", validate_opt.inner.count, "Number of random instances")
      ->capture_default_str();
  validate->add_option("--dim", validate_opt.inner.dim_a, "Dimension of both subsystems")
      ->capture_default_str();
  validate->add_option("--dims", dims_ab, "Measured and memory dimensions: dA dB")
      ->expected(2);
  validate
      ->add_option("--measurements", validate_opt.inner.measurements,
                   "Bases per instance (2..7)")
      ->capture_default_str();
  validate->add_option("--seed", validate_opt.inner.seed, "Base seed")->capture_default_str();
  validate
      ->add_option("--dump-prefix", validate_opt.inner.dump_prefix,
                   "Path prefix for the worst-instance dump (empty disables)")
      ->capture_default_str();
  validate->add_flag("--serial", validate_serial, "Force the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eub::cli::exit_invalid;
  }

  if (*bounds) {
    bounds_opt.memory_side = memory_side[0];
    return eub::cli::cmd_bounds(bounds_opt);
  }
  if (*sweep) {
    if (grid > 0) sweep_opt.steps = grid;
    return eub::cli::cmd_sweep(sweep_opt);
  }
  if (*witness) {
    witness_opt.split_x = split[0];
    witness_opt.split_y = split[1];
    return eub::cli::cmd_witness(witness_opt);
  }
  if (*validate) {
    if (dims_ab.size() == 2) {
      validate_opt.inner.dim_a = dims_ab[0];
      validate_opt.inner.dim_b = dims_ab[1];
    }
    if (validate_serial) validate_opt.inner.exec = eub::par::Exec::Serial;
    return eub::cli::cmd_validate(validate_opt);
  }
  return eub::cli::exit_invalid;
}
