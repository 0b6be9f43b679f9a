#include "eub/multi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eub/rng.hpp"

namespace eub {

MeasurementChain make_chain(std::vector<ProjectiveBasis> bases) {
  if (bases.size() < 2) throw ValidationError("measurement chain needs at least 2 bases");
  for (const auto& b : bases)
    if (b.dim != bases.front().dim)
      throw DimensionError("measurement chain bases have mixed dimensions");
  return MeasurementChain{std::move(bases)};
}

namespace {

// Outcome distribution of m on the state's full Hilbert space (the chain
// treats a multi-part measured system as one block).
ProbVector full_probs(const QuantumState& state, const ProjectiveBasis& m) {
  const int total = state.total_dim();
  if (total != m.dim)
    throw DimensionError("basis dim " + std::to_string(m.dim) + " vs state dim " +
                         std::to_string(total));
  std::vector<double> p(static_cast<std::size_t>(m.dim));
  for (int i = 0; i < m.dim; ++i) {
    const CVec u = m.vec(i);
    p[static_cast<std::size_t>(i)] = (u.adjoint() * state.rho * u)(0, 0).real();
  }
  return ProbVector::checked(std::move(p));
}

Eigen::MatrixXd overlap_matrix(const ProjectiveBasis& a, const ProjectiveBasis& b) {
  return (a.vectors.adjoint() * b.vectors).cwiseAbs2();
}

double bound_from(const ChainCoefficients& c, double conditional, int n,
                  const MajorizationFrame& frame) {
  const std::size_t d = c.sorted.size();
  if (frame.size() < d - 1) throw DimensionError("majorization frame too short for chain");
  double value = (n - 1) * conditional - std::log2(c.sorted.front());
  for (std::size_t k = 0; k + 1 < d; ++k)
    value += (1.0 - frame.cumulative[k]) * std::log2(c.sorted[k] / c.sorted[k + 1]);
  return value;
}

}  // namespace

ChainCoefficients chain_coefficients(const MeasurementChain& chain, const QuantumState& rho_a) {
  const int n = chain.count();
  const int d = chain.dim();
  if (n < 2) throw ValidationError("measurement chain needs at least 2 bases");
  if (rho_a.total_dim() != d)
    throw DimensionError("chain dimension does not match the measured state");

  // Column maxima of the first overlap matrix, then fold the remaining
  // matrices by vector-matrix products: entry i_N accumulates
  // sum over intermediate outcomes of max_{i_1} c(1,2) * prod c(m, m+1).
  const Eigen::MatrixXd first = overlap_matrix(chain.bases[0], chain.bases[1]);
  Eigen::RowVectorXd v = first.colwise().maxCoeff();
  for (int m = 1; m + 1 < n; ++m)
    v = v * overlap_matrix(chain.bases[static_cast<std::size_t>(m)],
                           chain.bases[static_cast<std::size_t>(m) + 1]);

  ChainCoefficients c;
  c.raw.assign(v.data(), v.data() + d);

  const ProbVector probs = full_probs(rho_a, chain.bases.back());
  c.order.resize(static_cast<std::size_t>(d));
  std::iota(c.order.begin(), c.order.end(), 0);
  std::sort(c.order.begin(), c.order.end(), [&](int a, int b) {
    if (c.raw[static_cast<std::size_t>(a)] != c.raw[static_cast<std::size_t>(b)])
      return c.raw[static_cast<std::size_t>(a)] > c.raw[static_cast<std::size_t>(b)];
    return a < b;  // stable on ties
  });
  for (int i : c.order) {
    c.sorted.push_back(c.raw[static_cast<std::size_t>(i)]);
    c.probs.push_back(probs[static_cast<std::size_t>(i)]);
  }
  return c;
}

double multi_bound(const QuantumState& rho_ab, const MeasurementChain& chain,
                   const MajorizationFrame& frame) {
  if (!rho_ab.bipartite()) throw DimensionError("multi_bound: state is not bipartite");
  if (chain.dim() != rho_ab.dims[0])
    throw DimensionError("multi_bound: chain does not match the measured side");
  const auto c = chain_coefficients(chain, partial_trace(rho_ab, {0}));
  return bound_from(c, entropy_report(rho_ab).H_A_given_B, chain.count(), frame);
}

double multi_bound(const QuantumState& rho_ab, const MeasurementChain& chain) {
  return multi_bound(rho_ab, chain, trivial_frame(static_cast<std::size_t>(chain.dim())));
}

OrderedBound multi_bound_opt(const QuantumState& rho_ab, const MeasurementChain& chain,
                             const MajorizationFrame& frame, par::Exec exec) {
  const int n = chain.count();
  if (n > 7) throw ValidationError("ordering search is exhaustive and limited to 7 measurements");
  if (!rho_ab.bipartite()) throw DimensionError("multi_bound_opt: state is not bipartite");
  if (chain.dim() != rho_ab.dims[0])
    throw DimensionError("multi_bound_opt: chain does not match the measured side");

  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const QuantumState rho_a = partial_trace(rho_ab, {0});
  const double conditional = entropy_report(rho_ab).H_A_given_B;

  // Lexicographic enumeration + smallest-index tie-break = deterministic
  // "first best ordering" regardless of scheduling.
  const auto best = par::max_indexed(perms.size(), exec, [&](std::size_t i) {
    MeasurementChain ordered;
    for (int src : perms[i]) ordered.bases.push_back(chain.bases[static_cast<std::size_t>(src)]);
    return bound_from(chain_coefficients(ordered, rho_a), conditional, n, frame);
  });
  return OrderedBound{best.value, perms[best.index]};
}

OrderedBound multi_bound_opt(const QuantumState& rho_ab, const MeasurementChain& chain,
                             par::Exec exec) {
  return multi_bound_opt(rho_ab, chain, trivial_frame(static_cast<std::size_t>(chain.dim())),
                         exec);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
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

// Best product-state weight <ab|P|ab> reachable from one random start:
// alternate between the top eigenvector of the operator contracted with the
// current |b> (giving |a>) and vice versa.
double alternating_ascent(const CMat& proj, int dx, int dy, rng::Stream& stream) {
  CVec a = rng::haar_vector(stream, dx);
  CVec b = rng::haar_vector(stream, dy);
  double objective = 0.0;
  for (int it = 0; it < 500; ++it) {
    CMat contracted_a = CMat::Zero(dx, dx);
    for (int x1 = 0; x1 < dx; ++x1)
      for (int x2 = 0; x2 < dx; ++x2) {
        Complex acc = 0.0;
        for (int y1 = 0; y1 < dy; ++y1)
          for (int y2 = 0; y2 < dy; ++y2)
            acc += std::conj(b(y1)) * proj(x1 * dy + y1, x2 * dy + y2) * b(y2);
        contracted_a(x1, x2) = acc;
      }
    auto spec_a = hermitian_spectrum(contracted_a);
    a = spec_a.eigenvectors.col(0);

    CMat contracted_b = CMat::Zero(dy, dy);
    for (int y1 = 0; y1 < dy; ++y1)
      for (int y2 = 0; y2 < dy; ++y2) {
        Complex acc = 0.0;
        for (int x1 = 0; x1 < dx; ++x1)
          for (int x2 = 0; x2 < dx; ++x2)
            acc += std::conj(a(x1)) * proj(x1 * dy + y1, x2 * dy + y2) * a(x2);
        contracted_b(y1, y2) = acc;
      }
    auto spec_b = hermitian_spectrum(contracted_b);
    b = spec_b.eigenvectors.col(0);

    const double next = spec_b.eigenvalues.front();
    if (next - objective < 1e-10 && it > 0) return next;
    objective = next;
  }
  return objective;
}

}  // namespace

MajorizationFrame separable_frame(const MeasurementChain& chain, int dx, int dy, int budget,
                                  std::uint64_t seed, par::Exec exec) {
  if (budget < 1) throw ValidationError("separable_frame: budget must be at least 1");
  if (dx < 2 || dy < 2) throw DimensionError("separable_frame: both factors must be at least 2");
  const int d = chain.dim();
  if (dx * dy != d)
    throw DimensionError("separable_frame: split does not factorize the measured dimension");
  const int n = chain.count();

  MajorizationFrame f;
  f.kind = MajorizationFrame::Kind::SeparableEstimate;
  double running = 0.0;
  for (int k = 1; k <= d - 1; ++k) {
    const auto subsets = subsets_of_size(d, k);

    // One task per (measurement, outcome subset, restart).
    const std::size_t tasks =
        static_cast<std::size_t>(n) * subsets.size() * static_cast<std::size_t>(budget);
    const auto best = par::max_indexed(tasks, exec, [&](std::size_t t) {
      const int restart = static_cast<int>(t % static_cast<std::size_t>(budget));
      const std::size_t ms = t / static_cast<std::size_t>(budget);
      const std::size_t subset = ms % subsets.size();
      const int m = static_cast<int>(ms / subsets.size());

      const auto& basis = chain.bases[static_cast<std::size_t>(m)];
      CMat proj = CMat::Zero(d, d);
      for (int i : subsets[subset]) proj += basis.vec(i) * basis.vec(i).adjoint();

      rng::Stream stream(rng::derive(seed, static_cast<std::uint64_t>(k) * 64 +
                                               static_cast<std::uint64_t>(m),
                                     subset, static_cast<std::uint64_t>(restart)));
      return alternating_ascent(proj, dx, dy, stream);
    });
    running = std::min(1.0, std::max(running, best.value));
    f.cumulative.push_back(running);
  }
  f.cumulative.push_back(1.0);  // k = d: every distribution sums to 1
  return f;
}

WitnessVerdict witness(const QuantumState& rho_a, const MeasurementChain& chain,
                       const MajorizationFrame& frame_sep) {
  if (frame_sep.kind != MajorizationFrame::Kind::SeparableEstimate)
    throw ValidationError("witness requires a frame built for separable states");
  const int d = chain.dim();
  if (rho_a.total_dim() != d)
    throw DimensionError("witness: chain does not match the tested state");
  if (frame_sep.size() < static_cast<std::size_t>(d) - 1)
    throw DimensionError("witness: frame too short");

  double lhs = 0.0;
  for (const auto& basis : chain.bases) lhs += shannon(full_probs(rho_a, basis));

  const auto c = chain_coefficients(chain, rho_a);
  double rhs = (chain.count() - 1) * von_neumann(rho_a) - std::log2(c.sorted.front());
  for (std::size_t k = 0; k + 1 < c.sorted.size(); ++k)
    rhs += (1.0 - frame_sep.cumulative[k]) * std::log2(c.sorted[k] / c.sorted[k + 1]);

  WitnessVerdict v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = rhs - lhs;
  v.entangled = v.margin > witness_margin_tol;
  return v;
}

}  // namespace eub
