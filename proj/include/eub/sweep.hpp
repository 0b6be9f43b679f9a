#pragma once

#include <string>
#include <vector>

#include "eub/parallel.hpp"

namespace eub {

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // ascending parameter order
};

// Figure-data sweeps, one table per scenario name:
//   fig1, fig2   theta in [0, pi/2], K points:
//                theta, entropic_sum, b_mu, b_mu_plus_HA, b_maj_ds, b_xj_plus_HA
//   fig3         p = i/(K+1), i = 1..K:
//                p, B1, B2, B3, B4
//   horodecki    alias of fig3
//   fig4         K x K grid, p in [0.05, 0.95] x theta in [0.1, 6.2]:
//                p, theta, q2_minus_q1
//   bell         d = 2..K+1:  d, h_a, q1, q2, s1, s2
//   werner       p in [0, 1], K points, second basis angle fixed at pi/8:
//                p, theta, h_ab, q1, q2, q2_minus_q1
//
// Rows are evaluated independently (optionally in parallel) and emitted in
// ascending parameter order regardless of completion order. Throws
// ValidationError for an unknown scenario name or steps < 1.
SweepTable run_sweep(const std::string& scenario, int steps,
                     par::Exec exec = par::default_exec());

}  // namespace eub
