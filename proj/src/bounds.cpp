#include "eub/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace eub {

std::vector<double> MajorizationFrame::omega() const {
  std::vector<double> w(cumulative.size());
  double prev = 0.0;
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    w[k] = std::max(0.0, cumulative[k] - prev);
    prev = cumulative[k];
  }
  return w;
}

MajorizationFrame trivial_frame(std::size_t length) {
  MajorizationFrame f;
  f.cumulative.assign(length, 1.0);
  f.kind = MajorizationFrame::Kind::Trivial;
  return f;
}

OverlapData overlaps(const ProjectiveBasis& m1, const ProjectiveBasis& m2) {
  if (m1.dim != m2.dim) throw DimensionError("overlaps: basis dims differ");
  const int d = m1.dim;
  const CMat amp = m1.vectors.adjoint() * m2.vectors;

  OverlapData o;
  o.matrix = amp.cwiseAbs2();
  o.sorted.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) o.sorted.push_back(o.matrix(j, k));
  std::sort(o.sorted.begin(), o.sorted.end(), std::greater<double>());

  // Rows/columns of |amp|^2 must each sum to 1 because amp is unitary; a
  // failure here means the bases were never validated.
  for (int j = 0; j < d; ++j) {
    const double row = o.matrix.row(j).sum();
    const double col = o.matrix.col(j).sum();
    if (std::abs(row - 1.0) > tol::reconstruct || std::abs(col - 1.0) > tol::reconstruct)
      throw ConsistencyError("overlaps: matrix is not unistochastic");
  }
  return o;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

MajorizationFrame direct_sum_frame(const ProjectiveBasis& m1, const ProjectiveBasis& m2,
                                   par::Exec exec) {
  if (m1.dim != m2.dim) throw DimensionError("direct_sum_frame: basis dims differ");
  const int d = m1.dim;
  const CMat amp = m1.vectors.adjoint() * m2.vectors;

  std::vector<std::vector<std::vector<int>>> combos(static_cast<std::size_t>(d) + 1);
  for (int r = 1; r <= d; ++r) combos[static_cast<std::size_t>(r)] = combinations(d, r);

  MajorizationFrame f;
  f.kind = MajorizationFrame::Kind::DirectSum;
  double running = 0.0;
  for (int k = 1; k <= 2 * d - 1; ++k) {
    // All r x s index-subset pairs with r + s = k + 1.
    struct Cand {
      const std::vector<int>* rows;
      const std::vector<int>* cols;
    };
    std::vector<Cand> cands;
    for (int r = std::max(1, k + 1 - d); r <= std::min(d, k); ++r) {
      const int s = k + 1 - r;
      for (const auto& rs : combos[static_cast<std::size_t>(r)])
        for (const auto& cs : combos[static_cast<std::size_t>(s)]) cands.push_back({&rs, &cs});
    }
    const auto best = par::max_indexed(cands.size(), exec, [&](std::size_t i) {
      const auto& c = cands[i];
      CMat sub(c.rows->size(), c.cols->size());
      for (std::size_t a = 0; a < c.rows->size(); ++a)
        for (std::size_t b = 0; b < c.cols->size(); ++b)
          sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
              amp((*c.rows)[a], (*c.cols)[b]);
      return top_singular_value_squared(sub);
    });
    running = std::min(1.0, std::max(running, best.value));
    f.cumulative.push_back(running);
  }
  // The full matrix is unitary, so the last entry is exactly 1; pin it
  // against round-off so omega() sums to 1.
  f.cumulative.back() = 1.0;
  return f;
}

double b_mu(const OverlapData& o) { return -std::log2(o.c(1)); }

double b_cp(const OverlapData& o) {
  return b_mu(o) + 0.5 * (1.0 - std::sqrt(o.c(1))) * std::log2(o.c(1) / o.c(2));
}

double b_xj(const OverlapData& o, const MajorizationFrame& f) {
  const int d = o.dim();
  if (static_cast<int>(f.size()) < 2 * d - 1)
    throw DimensionError("b_xj: frame too short for overlap dimension");
  double value = b_cp(o);
  for (int k = 2; k <= d - 1; ++k) {
    const double omega_2k = f.cumulative[static_cast<std::size_t>(2 * k - 1)];
    value += 0.5 * (2.0 - omega_2k) * std::log2(o.c(k) / o.c(k + 1));
  }
  return value;
}

double b_maj_ds(const MajorizationFrame& f) { return shannon(f.omega()); }

double q1(const EntropyReport& r) { return -r.I_AB; }

double q2(const QuantumState& rho_ab, const ProjectiveBasis& m1, const ProjectiveBasis& m2) {
  const QuantumState rho_b = partial_trace(rho_ab, {1});
  const double s1 = holevo_terms(conditional_ensemble(rho_ab, m1), rho_b).S_m;
  const double s2 = holevo_terms(conditional_ensemble(rho_ab, m2), rho_b).S_m;
  return -2.0 * von_neumann(rho_b) + s1 + s2;
}

double q_lambda(double lambda, double q1_value, double q2_value) {
  if (lambda < 0.0 || lambda > 1.0)
    throw ValidationError({{"lambda_range", std::max(-lambda, lambda - 1.0),
                            "lambda = " + std::to_string(lambda)}});
  return lambda * q1_value + (1.0 - lambda) * q2_value;
}

BoundRegistry BoundRegistry::builtin() {
  BoundRegistry reg;
  reg.add({"majorization_direct_sum", false,
           [](const QuantumState&, const ProjectiveBasis& m1, const ProjectiveBasis& m2) {
             return b_maj_ds(direct_sum_frame(m1, m2));
           }});
  return reg;
}

void BoundRegistry::add(ClassicalBoundEntry entry) { entries_.push_back(std::move(entry)); }

namespace {

BoundCC assemble_bound_cc(double bxj, const EntropyReport& r, double q1v, double q2v) {
  // The two forms are algebraically equal (H(A|B) = H(A) + Q1); computing
  // both through different routes keeps that identity under test.
  return BoundCC{bxj + r.H_A + std::max(q1v, q2v),
                 bxj + r.H_A_given_B + std::max(0.0, q2v - q1v)};
}

}  // namespace

BoundCC bound_cc(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                 const ProjectiveBasis& m2) {
  const EntropyReport r = entropy_report(rho_ab);
  const OverlapData o = overlaps(m1, m2);
  const MajorizationFrame f = direct_sum_frame(m1, m2);
  return assemble_bound_cc(b_xj(o, f), r, q1(r), q2(rho_ab, m1, m2));
}

double bound_c(const QuantumState& rho_ab, const ProjectiveBasis& m1, const ProjectiveBasis& m2,
               const BoundRegistry& registry) {
  if (registry.empty()) throw ValidationError("bound_c: registry has no entries");
  const double h_a = von_neumann(partial_trace(rho_ab, {0}));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& entry : registry.entries()) {
    const double v = entry.eval(rho_ab, m1, m2) + (entry.includes_mixing_part ? h_a : 0.0);
    best = std::max(best, v);
  }
  return best + q2(rho_ab, m1, m2);
}

BoundReport hybrid_bound(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                         const ProjectiveBasis& m2, const BoundRegistry& registry,
                         const std::vector<double>& lambdas, par::Exec exec) {
  if (registry.empty()) throw ValidationError("hybrid_bound: registry has no entries");

  BoundReport rep;
  const EntropyReport ent = entropy_report(rho_ab);
  rep.H_A = ent.H_A;
  rep.H_B = ent.H_B;
  rep.H_A_given_B = ent.H_A_given_B;

  rep.entropic_sum = shannon(measurement_probs(rho_ab, m1)) +
                     shannon(measurement_probs(rho_ab, m2));
  rep.conditional_sum =
      measured_conditional_entropy(rho_ab, m1) + measured_conditional_entropy(rho_ab, m2);

  const OverlapData o = overlaps(m1, m2);
  const MajorizationFrame f = direct_sum_frame(m1, m2, exec);
  rep.B_MU = b_mu(o);
  rep.B_CP = b_cp(o);
  rep.B_XJ = b_xj(o, f);
  rep.B_MAJ_DS = b_maj_ds(f);

  rep.Q1 = q1(ent);
  rep.Q2 = q2(rho_ab, m1, m2);
  for (double l : lambdas) rep.Q_lambda.emplace_back(l, q_lambda(l, rep.Q1, rep.Q2));

  const BoundCC cc = assemble_bound_cc(rep.B_XJ, ent, rep.Q1, rep.Q2);
  rep.bound_CC = cc.value;
  rep.bound_CC_adabi_form = cc.adabi_form;

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& entry : registry.entries()) {
    const double raw = entry.eval(rho_ab, m1, m2);
    rep.plugin_values[entry.name] = raw;
    best = std::max(best, raw + (entry.includes_mixing_part ? rep.H_A : 0.0));
  }
  rep.bound_C = best + rep.Q2;

  rep.hybrid = std::max(rep.bound_C, rep.bound_CC);
  return rep;
}

}  // namespace eub
