#include "eub/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "eub/bounds.hpp"
#include "eub/entropy.hpp"
#include "eub/io.hpp"
#include "eub/multi.hpp"
#include "eub/rng.hpp"

namespace eub {

namespace {

struct InstanceResult {
  long long checks = 0;
  std::vector<std::pair<std::string, double>> fails;  // (check name, magnitude)
};

class Checker {
 public:
  explicit Checker(InstanceResult& r) : r_(r) {}

  // lhs >= rhs - slack
  void ge(const std::string& name, double lhs, double rhs, double slack) {
    ++r_.checks;
    double deficit = rhs - lhs;
    if (!(deficit <= slack)) r_.fails.emplace_back(name, deficit);
  }

  void close(const std::string& name, double a, double b, double slack) {
    ++r_.checks;
    double diff = std::abs(a - b);
    if (!(diff <= slack)) r_.fails.emplace_back(name, diff);
  }

 private:
  InstanceResult& r_;
};

QuantumState random_state(std::uint64_t seed, std::uint64_t instance, int da, int db) {
  rng::Stream s(rng::derive(seed, instance, 0));
  return make_state(rng::ginibre_state_matrix(s, da * db), {da, db});
}

std::vector<ProjectiveBasis> random_bases(std::uint64_t seed, std::uint64_t instance,
                                          int count, int dim) {
  std::vector<ProjectiveBasis> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    rng::Stream s(rng::derive(seed, instance, 1 + static_cast<std::uint64_t>(m)));
    out.push_back(make_basis(rng::haar_unitary(s, dim)));
  }
  return out;
}

void check_instance(const ValidateOptions& o, std::uint64_t instance, InstanceResult& res) {
  Checker ck(res);
  const int da = o.dim_a;
  const int db = o.dim_b > 0 ? o.dim_b : o.dim_a;

  QuantumState state = random_state(o.seed, instance, da, db);
  std::vector<ProjectiveBasis> bases = random_bases(o.seed, instance, o.measurements, da);

  BoundReport r = hybrid_bound(state, bases[0], bases[1], BoundRegistry::builtin(),
                               {0.25, 0.5, 0.75}, par::Exec::Serial);

  ck.ge("relation_hybrid", r.conditional_sum, r.hybrid, tol::derived);
  ck.ge("relation_mu", r.conditional_sum, r.B_MU + r.H_A_given_B, tol::derived);
  ck.ge("relation_cp", r.conditional_sum, r.B_CP + r.H_A_given_B, tol::derived);
  ck.ge("relation_xj_q1", r.conditional_sum, r.B_XJ + r.H_A + r.Q1, tol::derived);
  ck.ge("relation_xj_q2", r.conditional_sum, r.B_XJ + r.H_A + r.Q2, tol::derived);
  ck.ge("bound_ordering_cp_mu", r.B_CP, r.B_MU, 1e-12);
  ck.ge("bound_ordering_xj_cp", r.B_XJ, r.B_CP, 1e-12);
  ck.ge("q1_sign", 0.0, r.Q1, 1e-9);
  ck.ge("q2_sign", 0.0, r.Q2, 1e-9);
  ck.close("cc_forms", r.bound_CC, r.bound_CC_adabi_form, tol::derived);
  ck.close("holevo_identity", r.conditional_sum, r.entropic_sum + r.Q2, tol::derived);
  for (const auto& [lambda, value] : r.Q_lambda) {
    (void)lambda;
    ck.ge("q_lambda_upper", std::max(r.Q1, r.Q2), value, 1e-12);
    ck.ge("q_lambda_lower", value, std::min(r.Q1, r.Q2), 1e-12);
  }

  // Direct-sum majorization: the concatenated outcome distributions of both
  // measurements are dominated by (1) followed by the frame differences.
  MajorizationFrame frame = direct_sum_frame(bases[0], bases[1], par::Exec::Serial);
  ProbVector p = measurement_probs(state, bases[0]);
  ProbVector q = measurement_probs(state, bases[1]);
  std::vector<double> joint = p.clamped();
  {
    std::vector<double> qq = q.clamped();
    joint.insert(joint.end(), qq.begin(), qq.end());
  }
  std::sort(joint.begin(), joint.end(), std::greater<double>());
  double run = 0.0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < joint.size(); ++k) {
    run += joint[k];
    double cap = k == 0 ? 1.0 : 1.0 + frame.cumulative[k - 1];
    worst_excess = std::max(worst_excess, run - cap);
  }
  ck.ge("majorization_domination", 0.0, worst_excess, tol::derived);
  ck.close("frame_first_entry", frame.cumulative[0], overlaps(bases[0], bases[1]).c(1), 1e-10);

  // Chain coefficients and the ordering-optimized bound over all bases.
  MeasurementChain chain = make_chain(bases);
  QuantumState rho_meas = partial_trace(state, {0});
  ChainCoefficients cc = chain_coefficients(chain, rho_meas);
  double sum_b = 0.0;
  double max_b = 0.0;
  for (double b : cc.raw) {
    sum_b += b;
    max_b = std::max(max_b, b);
  }
  ck.ge("chain_sum", sum_b, 1.0, 1e-9);
  ck.ge("chain_entry_cap", 1.0, max_b, 1e-9);

  OrderedBound ob = multi_bound_opt(state, chain, par::Exec::Serial);
  double cond_total = 0.0;
  for (const auto& basis : bases) {
    cond_total += measured_conditional_entropy(state, basis);
  }
  ck.ge("relation_multi", cond_total, ob.best, tol::derived);
}

}  // namespace

ValidateSummary run_validation(const ValidateOptions& options) {
  std::vector<Violation> bad;
  if (options.count < 1) bad.push_back({"count_positive", static_cast<double>(options.count)});
  if (options.dim_a < 2) bad.push_back({"dim_a_at_least_two", static_cast<double>(options.dim_a)});
  if (options.dim_b != 0 && options.dim_b < 2) {
    bad.push_back({"dim_b_at_least_two", static_cast<double>(options.dim_b)});
  }
  if (options.measurements < 2 || options.measurements > 7) {
    bad.push_back({"measurements_in_2_to_7", static_cast<double>(options.measurements)});
  }
  if (!bad.empty()) throw ValidationError("invalid validation options", bad);

  std::vector<InstanceResult> results(static_cast<std::size_t>(options.count));
  par::for_range(static_cast<std::size_t>(options.count), options.exec, [&](std::size_t si) {
    const int i = static_cast<int>(si);
    auto& res = results[static_cast<std::size_t>(i)];
    try {
      check_instance(options, static_cast<std::uint64_t>(i), res);
    } catch (const std::exception& e) {
      res.fails.emplace_back(std::string("exception: ") + e.what(),
                             std::numeric_limits<double>::infinity());
    }
  });

  ValidateSummary summary;
  summary.instances = options.count;
  for (int i = 0; i < options.count; ++i) {
    const auto& res = results[static_cast<std::size_t>(i)];
    summary.checks += res.checks;
    if (res.fails.empty()) continue;
    ++summary.violations;
    for (const auto& [name, magnitude] : res.fails) {
      if (magnitude > summary.worst || summary.worst_instance < 0) {
        summary.worst = magnitude;
        summary.worst_check = name;
        summary.worst_instance = i;
      }
    }
  }

  if (summary.violations > 0 && !options.dump_prefix.empty()) {
    auto inst = static_cast<std::uint64_t>(summary.worst_instance);
    const int da = options.dim_a;
    const int db = options.dim_b > 0 ? options.dim_b : options.dim_a;
    io::write_state_file(options.dump_prefix + "_state.json",
                         random_state(options.seed, inst, da, db));
    auto bases = random_bases(options.seed, inst, options.measurements, da);
    for (std::size_t m = 0; m < bases.size(); ++m) {
      io::write_basis_file(options.dump_prefix + "_basis_" + std::to_string(m) + ".json",
                           bases[m]);
    }
  }
  return summary;
}

}  // namespace eub
