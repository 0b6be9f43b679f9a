#include "eub/sweep.hpp"

#include <cmath>

#include "eub/bounds.hpp"
#include "eub/entropy.hpp"
#include "eub/scenarios.hpp"

namespace eub {

namespace {

constexpr double pi = 3.14159265358979323846;

void require_steps(int steps) {
  if (steps < 1) {
    throw ValidationError("sweep steps must be >= 1", {{"steps_positive", static_cast<double>(steps)}});
  }
}

// Rows of the memoryless theta-family comparison: the entropy sum of both
// measurements against the overlap-only bounds, each lifted by the state
// entropy where the relation calls for it.
std::vector<double> theta_family_row(const Scenario& sc) {
  const QuantumState& rho = sc.state;
  const ProjectiveBasis& m1 = sc.bases[0];
  const ProjectiveBasis& m2 = sc.bases[1];

  double h1 = shannon(measurement_probs(rho, m1));
  double h2 = shannon(measurement_probs(rho, m2));
  double h_a = von_neumann(rho);

  OverlapData o = overlaps(m1, m2);
  MajorizationFrame f = direct_sum_frame(m1, m2, par::Exec::Serial);

  double mu = b_mu(o);
  return {sc.params.at("theta"), h1 + h2, mu, mu + h_a, b_maj_ds(f), b_xj(o, f) + h_a};
}

SweepTable theta_family(int steps, par::Exec exec, bool diagonal_family) {
  SweepTable t;
  t.header = {"theta", "entropic_sum", "b_mu", "b_mu_plus_HA", "b_maj_ds", "b_xj_plus_HA"};
  t.rows.resize(static_cast<std::size_t>(steps));
  par::for_range(static_cast<std::size_t>(steps), exec, [&](std::size_t si) {
    const int i = static_cast<int>(si);
    double theta = steps == 1 ? 0.0 : (pi / 2.0) * i / (steps - 1);
    Scenario sc = diagonal_family ? rho2_scenario(theta) : rho1_scenario(theta);
    t.rows[static_cast<std::size_t>(i)] = theta_family_row(sc);
  });
  return t;
}

// Memory-on-A family: four conditional-entropy estimates of H(B) for the
// same state, the last two built from basis pairs with identical overlaps.
SweepTable memory_family(int steps, par::Exec exec) {
  SweepTable t;
  t.header = {"p", "B1", "B2", "B3", "B4"};
  t.rows.resize(static_cast<std::size_t>(steps));
  par::for_range(static_cast<std::size_t>(steps), exec, [&](std::size_t si) {
    const int i = static_cast<int>(si);
    double p = static_cast<double>(i + 1) / (steps + 1);
    Scenario sc = horodecki_scenario(p);
    // Stored order is (memory, measured); computations want measured first.
    QuantumState swapped = swap_subsystems(sc.state);
    EntropyReport ent = entropy_report(swapped);
    double b1 = ent.H_A;
    double b2 = ent.H_A_given_B;
    double b3 = b1 + q2(swapped, sc.bases[0], sc.bases[1]);
    double b4 = b1 + q2(swapped, sc.bases[2], sc.bases[3]);
    t.rows[static_cast<std::size_t>(i)] = {p, b1, b2, b3, b4};
  });
  return t;
}

SweepTable measure_gap_surface(int steps, par::Exec exec) {
  SweepTable t;
  t.header = {"p", "theta", "q2_minus_q1"};
  t.rows.resize(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  par::for_range(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps), exec, [&](std::size_t sflat) {
    const int flat = static_cast<int>(sflat);
    int i = flat / steps;  // p index
    int j = flat % steps;  // theta index
    double p = steps == 1 ? 0.05 : 0.05 + 0.9 * i / (steps - 1);
    double theta = steps == 1 ? 0.1 : 0.1 + 6.1 * j / (steps - 1);
    Scenario sc = werner_scenario(p, theta);
    EntropyReport ent = entropy_report(sc.state);
    double q1_v = q1(ent);
    double q2_v = q2(sc.state, sc.bases[0], sc.bases[1]);
    t.rows[static_cast<std::size_t>(flat)] = {p, theta, q2_v - q1_v};
  });
  return t;
}

SweepTable maximally_entangled_family(int steps, par::Exec exec) {
  // Dimension d = steps + 1 drives d^2 x d^2 eigenproblems; keep desk-scale.
  if (steps > 30) {
    throw ValidationError("maximally entangled sweep supports at most 30 steps",
                          {{"steps_capped", static_cast<double>(steps)}});
  }
  SweepTable t;
  t.header = {"d", "h_a", "q1", "q2", "s1", "s2"};
  t.rows.resize(static_cast<std::size_t>(steps));
  par::for_range(static_cast<std::size_t>(steps), exec, [&](std::size_t si) {
    const int i = static_cast<int>(si);
    int d = i + 2;
    Scenario sc = bell_scenario(d);
    EntropyReport ent = entropy_report(sc.state);
    QuantumState rho_b = partial_trace(sc.state, {1});
    HolevoTerms t1 = holevo_terms(conditional_ensemble(sc.state, sc.bases[0]), rho_b);
    HolevoTerms t2 = holevo_terms(conditional_ensemble(sc.state, sc.bases[1]), rho_b);
    double q2_v = -2.0 * ent.H_B + t1.S_m + t2.S_m;
    t.rows[static_cast<std::size_t>(i)] = {static_cast<double>(d), ent.H_A,
                                           q1(ent), q2_v, t1.S_m, t2.S_m};
  });
  return t;
}

SweepTable mixing_family(int steps, par::Exec exec) {
  SweepTable t;
  t.header = {"p", "theta", "h_ab", "q1", "q2", "q2_minus_q1"};
  t.rows.resize(static_cast<std::size_t>(steps));
  const double theta = pi / 8.0;
  par::for_range(static_cast<std::size_t>(steps), exec, [&](std::size_t si) {
    const int i = static_cast<int>(si);
    double p = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    Scenario sc = werner_scenario(p, theta);
    EntropyReport ent = entropy_report(sc.state);
    double q1_v = q1(ent);
    double q2_v = q2(sc.state, sc.bases[0], sc.bases[1]);
    t.rows[static_cast<std::size_t>(i)] = {p, theta, ent.H_AB, q1_v, q2_v, q2_v - q1_v};
  });
  return t;
}

}  // namespace

SweepTable run_sweep(const std::string& scenario, int steps, par::Exec exec) {
  require_steps(steps);
  if (scenario == "fig1") return theta_family(steps, exec, false);
  if (scenario == "fig2") return theta_family(steps, exec, true);
  if (scenario == "fig3" || scenario == "horodecki") return memory_family(steps, exec);
  if (scenario == "fig4") return measure_gap_surface(steps, exec);
  if (scenario == "bell") return maximally_entangled_family(steps, exec);
  if (scenario == "werner") return mixing_family(steps, exec);
  throw ValidationError("unknown sweep scenario: " + scenario, {{"scenario_known", 0.0}});
}

}  // namespace eub
