#include "eub/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eub/rng.hpp"

namespace eub {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Eigenvalues clamped into [0, 1] before taking logs; round-off can push
// them slightly past either end.
std::vector<double> clamped_spectrum(const CMat& rho) {
  auto spec = hermitian_spectrum(rho);
  for (double& v : spec.eigenvalues) v = std::clamp(v, 0.0, 1.0);
  return spec.eigenvalues;
}

}  // namespace

double shannon(const ProbVector& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h -= xlog2x(p[i]);
  return h;
}

double shannon(const std::vector<double>& raw_probs) {
  double h = 0.0;
  for (double p : raw_probs) h -= xlog2x(p < 0.0 ? 0.0 : p);
  return h;
}

double von_neumann(const QuantumState& state) {
  double h = 0.0;
  for (double v : clamped_spectrum(state.rho)) h -= xlog2x(v);
  return h;
}

double relative_entropy(const QuantumState& rho, const QuantumState& sigma) {
  if (rho.dims != sigma.dims)
    throw DimensionError("relative_entropy: dimension profiles differ");

  const auto sig = hermitian_spectrum(sigma.rho);
  const int d = static_cast<int>(sig.eigenvalues.size());

  // Weight of rho outside sigma's support decides finiteness.
  double null_weight = 0.0;
  for (int k = 0; k < d; ++k) {
    if (sig.eigenvalues[static_cast<std::size_t>(k)] < tol::prob_floor) {
      const CVec v = sig.eigenvectors.col(k);
      null_weight += std::max(0.0, (v.adjoint() * rho.rho * v)(0, 0).real());
    }
  }
  if (null_weight > 1e-10) return std::numeric_limits<double>::infinity();

  double tr_rho_log_rho = 0.0;
  for (double r : clamped_spectrum(rho.rho)) tr_rho_log_rho += xlog2x(r);

  double tr_rho_log_sigma = 0.0;
  for (int k = 0; k < d; ++k) {
    const double s = sig.eigenvalues[static_cast<std::size_t>(k)];
    if (s < tol::prob_floor) continue;
    const CVec v = sig.eigenvectors.col(k);
    const double w = std::max(0.0, (v.adjoint() * rho.rho * v)(0, 0).real());
    tr_rho_log_sigma += w * std::log2(s);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

ProbVector measurement_probs(const QuantumState& state, const ProjectiveBasis& m, int measured) {
  if (measured < 0 || measured >= static_cast<int>(state.dims.size()))
    throw DimensionError("measurement_probs: bad subsystem index");
  const QuantumState reduced =
      (state.dims.size() == 1) ? state : partial_trace(state, {measured});
  if (reduced.rho.rows() != m.dim)
    throw DimensionError("measurement_probs: basis dim " + std::to_string(m.dim) +
                         " vs subsystem dim " + std::to_string(reduced.rho.rows()));
  std::vector<double> p(static_cast<std::size_t>(m.dim));
  for (int i = 0; i < m.dim; ++i) {
    const CVec u = m.vec(i);
    p[static_cast<std::size_t>(i)] = (u.adjoint() * reduced.rho * u)(0, 0).real();
  }
  return ProbVector::checked(std::move(p));
}

QuantumState post_measurement_state(const QuantumState& rho_ab, const ProjectiveBasis& m) {
  if (!rho_ab.bipartite())
    throw DimensionError("post_measurement_state: state is not bipartite");
  if (rho_ab.dims[0] != m.dim)
    throw DimensionError("post_measurement_state: basis does not match measured side");
  const int db = rho_ab.dims[1];
  const CMat eye = CMat::Identity(db, db);
  CMat out = CMat::Zero(rho_ab.rho.rows(), rho_ab.rho.cols());
  for (int j = 0; j < m.dim; ++j) {
    const CMat proj = tensor(CMat(m.vec(j) * m.vec(j).adjoint()), eye);
    out += proj * rho_ab.rho * proj;
  }
  out = ((out + out.adjoint()) / 2.0).eval();
  return make_state(std::move(out), rho_ab.dims);
}

ConditionalEnsemble conditional_ensemble(const QuantumState& rho_ab, const ProjectiveBasis& m,
                                         const std::string& basis_label) {
  if (!rho_ab.bipartite())
    throw DimensionError("conditional_ensemble: state is not bipartite");
  if (rho_ab.dims[0] != m.dim)
    throw DimensionError("conditional_ensemble: basis does not match measured side");
  const int da = rho_ab.dims[0], db = rho_ab.dims[1];

  ConditionalEnsemble e;
  e.basis_label = basis_label;
  std::vector<double> probs(static_cast<std::size_t>(da));
  for (int j = 0; j < da; ++j) {
    // B_j = (<u_j| ox I) rho (|u_j> ox I), a db x db block; its trace is the
    // outcome probability and B_j / tr is the steered memory state.
    const CVec u = m.vec(j);
    CMat bj = CMat::Zero(db, db);
    for (int a1 = 0; a1 < da; ++a1)
      for (int a2 = 0; a2 < da; ++a2) {
        const Complex w = std::conj(u(a1)) * u(a2);
        if (w == Complex(0.0, 0.0)) continue;
        bj += w * rho_ab.rho.block(a1 * db, a2 * db, db, db);
      }
    bj = ((bj + bj.adjoint()) / 2.0).eval();
    const double pj = bj.trace().real();
    probs[static_cast<std::size_t>(j)] = pj;
    const bool skip = pj < tol::prob_floor;
    e.negligible.push_back(skip);
    // Negligible branches get a placeholder never entering any sum.
    e.states.push_back(QuantumState{{db}, skip ? CMat(CMat::Identity(db, db) / db)
                                               : CMat(bj / pj)});
  }
  e.probs = ProbVector::checked(std::move(probs));
  return e;
}

HolevoTerms holevo_terms(const ConditionalEnsemble& e, const QuantumState& rho_b) {
  const int db = static_cast<int>(rho_b.rho.rows());
  CMat avg = CMat::Zero(db, db);
  double s_m = 0.0;
  for (std::size_t i = 0; i < e.states.size(); ++i) {
    if (e.negligible[i]) continue;
    if (e.states[i].rho.rows() != db)
      throw DimensionError("holevo_terms: ensemble state dim mismatch");
    avg += e.probs[i] * e.states[i].rho;
    s_m += e.probs[i] * von_neumann(e.states[i]);
  }
  const double avg_err = max_abs(avg - rho_b.rho);
  if (avg_err > tol::reconstruct)
    throw ValidationError({{"ensemble_average", avg_err,
                            "sum p_i rho_i does not reproduce the memory state"}});
  return HolevoTerms{s_m, von_neumann(rho_b) - s_m};
}

EntropyReport entropy_report(const QuantumState& rho_ab) {
  if (!rho_ab.bipartite()) throw DimensionError("entropy_report: state is not bipartite");
  EntropyReport r;
  r.H_A = von_neumann(partial_trace(rho_ab, {0}));
  r.H_B = von_neumann(partial_trace(rho_ab, {1}));
  r.H_AB = von_neumann(rho_ab);
  r.H_A_given_B = r.H_AB - r.H_B;
  r.I_AB = r.H_A + r.H_B - r.H_AB;
  return r;
}

double measured_conditional_entropy(const QuantumState& rho_ab, const ProjectiveBasis& m) {
  const QuantumState rho_b = partial_trace(rho_ab, {1});
  const double h_b = von_neumann(rho_b);

  const double via_joint = von_neumann(post_measurement_state(rho_ab, m)) - h_b;

  const auto ensemble = conditional_ensemble(rho_ab, m);
  const double via_ensemble =
      shannon(ensemble.probs) + holevo_terms(ensemble, rho_b).S_m - h_b;

  const double gap = std::abs(via_joint - via_ensemble);
  if (gap > tol::derived)
    throw ConsistencyError("measured_conditional_entropy: routes disagree by " +
                           std::to_string(gap));
  return via_joint;
}

double empirical_entropy(const ProbVector& p, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("empirical_entropy: need at least one sample");
  rng::Stream stream(seed);
  std::vector<std::int64_t> counts(p.size(), 0);
  for (std::int64_t s = 0; s < n; ++s) {
    const double u = stream.uniform();
    double acc = 0.0;
    std::size_t pick = p.size() - 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    ++counts[pick];
  }
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c == 0) continue;
    const double f = static_cast<double>(c) / static_cast<double>(n);
    h -= f * std::log2(f);
  }
  return h;
}

}  // namespace eub
