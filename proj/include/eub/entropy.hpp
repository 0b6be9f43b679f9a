#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eub/qcore.hpp"

namespace eub {

// Measurement-induced ensemble on the memory side: outcome probabilities
// p_i with conditional memory states rho_{B,i}. Branches with p_i < 1e-12
// are flagged negligible and excluded from Holevo sums.
struct ConditionalEnsemble {
  ProbVector probs;
  std::vector<QuantumState> states;
  std::vector<bool> negligible;
  std::string basis_label;
};

// The five standard entropies of a bipartite state, in bits. The conditional
// entropy and mutual information are derived from the joint entropies, so
// H_A_given_B == H_AB - H_B and I_AB == H_A + H_B - H_AB hold exactly.
struct EntropyReport {
  double H_A = 0.0;
  double H_B = 0.0;
  double H_AB = 0.0;
  double H_A_given_B = 0.0;
  double I_AB = 0.0;
};

// -sum p log2 p with 0 log 0 = 0.
double shannon(const ProbVector& p);
double shannon(const std::vector<double>& raw_probs);

double von_neumann(const QuantumState& state);

// Tr(rho (log2 rho - log2 sigma)). Returns +infinity when rho has weight
// above 1e-10 on sigma-eigenvectors whose eigenvalue is below 1e-12.
double relative_entropy(const QuantumState& rho, const QuantumState& sigma);

// Outcome distribution of measuring subsystem `measured` in basis m; the
// state is reduced to that subsystem first.
ProbVector measurement_probs(const QuantumState& state, const ProjectiveBasis& m,
                             int measured = 0);

// sum_j ([u_j] ox I) rho ([u_j] ox I): the classical-quantum state after
// measuring subsystem 0 of a bipartite state.
QuantumState post_measurement_state(const QuantumState& rho_ab, const ProjectiveBasis& m);

ConditionalEnsemble conditional_ensemble(const QuantumState& rho_ab, const ProjectiveBasis& m,
                                         const std::string& basis_label = "");

struct HolevoTerms {
  double S_m;    // sum_i p_i H(rho_{B,i})
  double chi_m;  // H(B) - S_m, the classical correlation
};

// Validates that the ensemble averages back to rho_B before evaluating.
HolevoTerms holevo_terms(const ConditionalEnsemble& e, const QuantumState& rho_b);

EntropyReport entropy_report(const QuantumState& rho_ab);

// H(M|B) computed two independent ways: via the post-measurement joint state
// and via shannon(p) + S_m - H(B). Throws ConsistencyError if the routes
// disagree beyond 1e-8; returns the joint-state route.
double measured_conditional_entropy(const QuantumState& rho_ab, const ProjectiveBasis& m);

// Plug-in Shannon estimate from n i.i.d. draws of p, deterministic given seed.
double empirical_entropy(const ProbVector& p, std::int64_t n, std::uint64_t seed);

}  // namespace eub
