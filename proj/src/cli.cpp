#include "eub/cli.hpp"

#include <cstdio>
#include <functional>

#include "eub/bounds.hpp"
#include "eub/entropy.hpp"
#include "eub/io.hpp"
#include "eub/multi.hpp"
#include "eub/sweep.hpp"

namespace eub::cli {

namespace {

// Uniform error-to-exit-code policy: dimension problems are distinguished
// from all other input problems; anything else unexpected is also treated as
// invalid input rather than crashing.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_dims;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    for (const auto& v : e.violations()) {
      std::fprintf(stderr, "  violated: %s (off by %s)%s%s\n", v.invariant.c_str(),
                   io::fmt(v.magnitude).c_str(), v.detail.empty() ? "" : " — ",
                   v.detail.c_str());
    }
    return exit_invalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_invalid;
  }
}

void emit(const io::Report& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(report.str().c_str(), stdout);
  } else {
    report.save(out_path);
  }
}

int bounds_pair_report(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                       const ProjectiveBasis& m2, const BoundsOptions& opt) {
  std::vector<double> lambdas =
      opt.lambdas.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0} : opt.lambdas;
  BoundReport r = hybrid_bound(rho_ab, m1, m2, BoundRegistry::builtin(), lambdas);

  io::Report out;
  out.add("b_cp", r.B_CP);
  out.add("b_maj_ds", r.B_MAJ_DS);
  out.add("b_mu", r.B_MU);
  out.add("b_xj", r.B_XJ);
  out.add("bound_c", r.bound_C);
  out.add("bound_cc", r.bound_CC);
  out.add("bound_cc_adabi_form", r.bound_CC_adabi_form);
  out.add("conditional_sum", r.conditional_sum);
  out.add("entropic_sum", r.entropic_sum);
  out.add("h_a", r.H_A);
  out.add("h_a_given_b", r.H_A_given_B);
  out.add("h_b", r.H_B);
  out.add("hybrid", r.hybrid);
  out.add("memory_side", std::string(1, opt.memory_side));
  for (const auto& [name, value] : r.plugin_values) {
    out.add("plugin_" + name, value);
  }
  out.add("q1", r.Q1);
  out.add("q2", r.Q2);
  for (const auto& [lambda, value] : r.Q_lambda) {
    out.add("q_lambda_" + io::fmt(lambda), value);
  }
  out.add("relation_satisfied", r.relation_satisfied());
  emit(out, opt.out_path);
  return r.relation_satisfied() ? exit_ok : exit_violation;
}

int bounds_chain_report(const QuantumState& rho_ab, std::vector<ProjectiveBasis> bases,
                        const BoundsOptions& opt) {
  MeasurementChain chain = make_chain(std::move(bases));
  double cond_sum = 0.0;
  for (const auto& b : chain.bases) {
    cond_sum += measured_conditional_entropy(rho_ab, b);
  }
  double plain = multi_bound(rho_ab, chain);
  OrderedBound best = multi_bound_opt(rho_ab, chain);
  bool satisfied = cond_sum >= best.best - tol::derived;

  io::Report out;
  out.add("conditional_sum", cond_sum);
  out.add("measurements", chain.count());
  out.add("memory_side", std::string(1, opt.memory_side));
  out.add("multi_bound", plain);
  out.add("multi_bound_opt", best.best);
  out.add("multi_bound_opt_ordering", best.ordering);
  out.add("relation_satisfied", satisfied);
  emit(out, opt.out_path);
  return satisfied ? exit_ok : exit_violation;
}

}  // namespace

int cmd_bounds(const BoundsOptions& opt) {
  return guarded([&]() -> int {
    if (opt.basis_paths.size() < 2) {
      throw ValidationError("bounds needs at least two basis files");
    }
    if (opt.memory_side != 'A' && opt.memory_side != 'B') {
      throw ValidationError("memory side must be A or B");
    }
    QuantumState state = io::read_state_file(opt.state_path);
    if (!state.bipartite()) {
      throw DimensionError("bounds needs a bipartite state (got " +
                           std::to_string(state.dims.size()) + " subsystems)");
    }
    // Library convention: measurements act on subsystem 0. With the memory
    // declared on side A the file's subsystems arrive (memory, measured).
    if (opt.memory_side == 'A') state = swap_subsystems(state);

    std::vector<ProjectiveBasis> bases;
    bases.reserve(opt.basis_paths.size());
    for (const auto& p : opt.basis_paths) {
      bases.push_back(io::read_basis_file(p));
      if (bases.back().dim != state.dims[0]) {
        throw DimensionError("basis dimension " + std::to_string(bases.back().dim) +
                             " does not match measured subsystem " +
                             std::to_string(state.dims[0]));
      }
    }
    if (bases.size() == 2) return bounds_pair_report(state, bases[0], bases[1], opt);
    return bounds_chain_report(state, std::move(bases), opt);
  });
}

int cmd_sweep(const SweepOptions& opt) {
  return guarded([&]() -> int {
    SweepTable t = run_sweep(opt.scenario, opt.steps,
                             opt.serial ? par::Exec::Serial : par::default_exec());
    io::Csv csv(t.header);
    for (const auto& r : t.rows) csv.row(r);
    if (opt.out_path.empty()) {
      std::fputs(csv.str().c_str(), stdout);
    } else {
      csv.save(opt.out_path);
    }
    return exit_ok;
  });
}

int cmd_witness(const WitnessOptions& opt) {
  return guarded([&]() -> int {
    QuantumState state = io::read_state_file(opt.state_path);
    std::vector<ProjectiveBasis> bases;
    bases.reserve(opt.basis_paths.size());
    for (const auto& p : opt.basis_paths) bases.push_back(io::read_basis_file(p));
    MeasurementChain chain = make_chain(std::move(bases));

    // The split is user input: reject it here so a bad one reads as invalid
    // input, not as an internal dimension fault.
    if (opt.split_x < 2 || opt.split_y < 2 ||
        opt.split_x * opt.split_y != chain.dim()) {
      throw ValidationError(
          "split must factor the measured dimension into two parts >= 2",
          {{"split_valid", 0.0,
            std::to_string(opt.split_x) + " x " + std::to_string(opt.split_y) +
                " vs dimension " + std::to_string(chain.dim())}});
    }
    if (state.total_dim() != chain.dim()) {
      throw DimensionError("state dimension " + std::to_string(state.total_dim()) +
                           " does not match measurement dimension " +
                           std::to_string(chain.dim()));
    }

    par::Exec exec = opt.serial ? par::Exec::Serial : par::default_exec();
    MajorizationFrame frame =
        separable_frame(chain, opt.split_x, opt.split_y, opt.budget, opt.seed, exec);
    WitnessVerdict v = witness(state, chain, frame);

    io::Report out;
    out.add("budget", opt.budget);
    out.add("frame_cumulative", frame.cumulative);
    out.add("frame_kind", std::string("separable_estimate"));
    out.add("lhs", v.lhs);
    out.add("margin", v.margin);
    out.add("rhs", v.rhs);
    out.add("seed", opt.seed);
    out.add("verdict", v.verdict());
    emit(out, opt.out_path);
    return exit_ok;
  });
}

int cmd_validate(const ValidateCmdOptions& opt) {
  return guarded([&]() -> int {
    ValidateSummary s = run_validation(opt.inner);
    std::printf("instances: %d\n", s.instances);
    std::printf("checks: %lld\n", s.checks);
    std::printf("violations: %d\n", s.violations);
    if (s.violations > 0) {
      std::printf("worst: %s (%s, instance %lld)\n", io::fmt(s.worst).c_str(),
                  s.worst_check.c_str(), s.worst_instance);
      if (!opt.inner.dump_prefix.empty()) {
        std::printf("worst instance dumped with prefix %s\n", opt.inner.dump_prefix.c_str());
      }
    }
    std::printf("result: %s\n", s.ok() ? "OK" : "VIOLATIONS");
    return s.ok() ? exit_ok : exit_violation;
  });
}

}  // namespace eub::cli
