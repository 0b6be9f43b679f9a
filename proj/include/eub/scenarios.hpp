#pragma once

#include <map>
#include <string>
#include <vector>

#include "eub/qcore.hpp"

namespace eub {

enum class MemorySide { None, A, B };

// A named fixture: a state, the measurement bases that go with it, and the
// parameter values it was built from. `memory_side` records which subsystem
// (in the stored ordering) acts as the memory; sweep/report code normalises
// so the measured side always comes first.
struct Scenario {
  std::string name;
  QuantumState state;
  std::vector<ProjectiveBasis> bases;
  std::map<std::string, double> params;
  MemorySide memory_side = MemorySide::None;
};

// Qubit pair used by the theta-family scenarios:
// M1 = standard, M2 = {(1/2, -sqrt(3)/2), (sqrt(3)/2, 1/2)}; c_1 = 3/4.
ProjectiveBasis qubit_basis_standard();
ProjectiveBasis qubit_basis_tilted();

// (1/2)[[cos^2 t + 1/2, cos t sin t], [cos t sin t, sin^2 t + 1/2]];
// spectrum (3/4, 1/4) independent of t. theta in [0, pi/2].
Scenario rho1_scenario(double theta);

// diag(cos^2 t, sin^2 t). theta in [0, pi/2].
Scenario rho2_scenario(double theta);

// The 2x4 entangled family (dims {2, 4}, normalisation 1/(1+7p)), with the
// dim-4 bases M1, M2 below attached; the 2-dim side is the memory. p in (0, 1).
Scenario horodecki_scenario(double p);

// Two pairs of dim-4 bases with identical overlap matrices:
// M1, M2 fixed vectors; M3 = M2; M4 = U M2 with U = sum_i |u2_i><u1_i|.
struct EqualOverlapChain {
  ProjectiveBasis m1, m2, m3, m4;
};
EqualOverlapChain equal_overlap_chain();

// (1-p)/4 I + p |phi+><phi+| with |phi+> = (|00>+|11>)/sqrt(2); eigenvalues
// ((1+3p)/4, 3 x (1-p)/4). Attached qubit bases: M1 = {(1/sqrt2, -1/sqrt2),
// (1/sqrt2, 1/sqrt2)}, M2(theta) = {(cos t, -sin t), (sin t, cos t)}.
// p in [0, 1], theta in [0, 2 pi].
Scenario werner_scenario(double p, double theta);

// Maximally entangled pure state (1/sqrt d) sum_i |ii>, dims {d, d},
// with standard and Fourier bases attached. d >= 2.
Scenario bell_scenario(int d);

// Fourier basis F_jk = exp(2 pi i jk / d)/sqrt(d); unbiased to the standard
// basis in every dimension.
ProjectiveBasis fourier_basis(int d);

}  // namespace eub
