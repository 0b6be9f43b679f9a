#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eub/entropy.hpp"
#include "eub/parallel.hpp"
#include "eub/qcore.hpp"

namespace eub {

// Squared overlaps c_jk = |<u1_j|u2_k>|^2 between two bases, plus the
// flattened entries sorted descending. Rows and columns each sum to 1.
struct OverlapData {
  Eigen::MatrixXd matrix;
  std::vector<double> sorted;  // length d^2, descending

  double c(int k) const { return sorted[static_cast<std::size_t>(k) - 1]; }  // 1-based
  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Nondecreasing cumulative majorization vector (Omega_1, ..., Omega_K = 1).
// Kind records how it was built; the entanglement witness only accepts
// SeparableEstimate frames.
struct MajorizationFrame {
  enum class Kind { DirectSum, Trivial, SeparableEstimate };

  std::vector<double> cumulative;
  Kind kind = Kind::Trivial;

  std::vector<double> omega() const;  // differences, sums to 1
  std::size_t size() const { return cumulative.size(); }
};

MajorizationFrame trivial_frame(std::size_t length);

OverlapData overlaps(const ProjectiveBasis& m1, const ProjectiveBasis& m2);

// Direct-sum majorization frame of length 2d-1: Omega_k is the maximal
// squared top singular value over submatrices of the amplitude matrix
// U_jk = <u1_j|u2_k> built from r rows and s columns with r + s = k + 1.
MajorizationFrame direct_sum_frame(const ProjectiveBasis& m1, const ProjectiveBasis& m2,
                                   par::Exec exec = par::default_exec());

double b_mu(const OverlapData& o);
double b_cp(const OverlapData& o);

// All-overlap bound: -log2 c1 + (1-sqrt(c1))/2 log2(c1/c2)
//                    + sum_{k=2}^{d-1} (2-Omega_{2k})/2 log2(c_k/c_{k+1}).
double b_xj(const OverlapData& o, const MajorizationFrame& f);

// Shannon entropy of the frame's difference vector.
double b_maj_ds(const MajorizationFrame& f);

double q1(const EntropyReport& r);
double q2(const QuantumState& rho_ab, const ProjectiveBasis& m1, const ProjectiveBasis& m2);
double q_lambda(double lambda, double q1_value, double q2_value);

// A classical-part bound participating in the composite maximum. When
// includes_mixing_part is set the entry enters the max as value + H(A).
struct ClassicalBoundEntry {
  std::string name;
  bool includes_mixing_part = false;
  std::function<double(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                       const ProjectiveBasis& m2)>
      eval;
};

class BoundRegistry {
 public:
  // Registry with the built-in direct-sum majorization bound.
  static BoundRegistry builtin();

  void add(ClassicalBoundEntry entry);
  const std::vector<ClassicalBoundEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ClassicalBoundEntry> entries_;
};

struct BoundCC {
  double value;       // B + H(A) + max(Q1, Q2)
  double adabi_form;  // B + H(A|B) + max(0, Q2 - Q1)
};

BoundCC bound_cc(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                 const ProjectiveBasis& m2);

double bound_c(const QuantumState& rho_ab, const ProjectiveBasis& m1, const ProjectiveBasis& m2,
               const BoundRegistry& registry);

// Every bound and measure for one (state, basis pair) instance, in bits.
struct BoundReport {
  double entropic_sum = 0.0;     // H(M1) + H(M2)
  double conditional_sum = 0.0;  // H(M1|B) + H(M2|B)
  double H_A = 0.0;
  double H_B = 0.0;
  double H_A_given_B = 0.0;
  double B_MU = 0.0;
  double B_CP = 0.0;
  double B_XJ = 0.0;
  double B_MAJ_DS = 0.0;
  double Q1 = 0.0;
  double Q2 = 0.0;
  std::vector<std::pair<double, double>> Q_lambda;  // (lambda, value)
  double bound_CC = 0.0;
  double bound_CC_adabi_form = 0.0;
  double bound_C = 0.0;
  double hybrid = 0.0;  // max(bound_C, bound_CC)
  std::map<std::string, double> plugin_values;

  bool relation_satisfied() const { return conditional_sum >= hybrid - tol::derived; }
};

// Assembles the full report; measurements act on subsystem 0, subsystem 1 is
// the memory. lambdas picks the Q(lambda) rows (default {0,.25,.5,.75,1}).
BoundReport hybrid_bound(const QuantumState& rho_ab, const ProjectiveBasis& m1,
                         const ProjectiveBasis& m2,
                         const BoundRegistry& registry = BoundRegistry::builtin(),
                         const std::vector<double>& lambdas = {0.0, 0.25, 0.5, 0.75, 1.0},
                         par::Exec exec = par::default_exec());

}  // namespace eub
