#pragma once

#include <optional>
#include <vector>

#include "eub/types.hpp"

namespace eub {

// Density matrix together with its subsystem dimension profile.
// Invariants (checked by make_state / check_state):
//   Hermitian within 1e-10, unit trace within 1e-10, eigenvalues >= -1e-10,
//   matrix side equal to the product of dims, every dim >= 2.
struct QuantumState {
  std::vector<int> dims;
  CMat rho;

  int total_dim() const {
    int n = 1;
    for (int d : dims) n *= d;
    return n;
  }
  bool bipartite() const { return dims.size() == 2; }
};

// Orthonormal family {|u_i>} defining a nondegenerate projective measurement.
// Column i of `vectors` is |u_i>; Gram == identity within 1e-10.
struct ProjectiveBasis {
  int dim = 0;
  CMat vectors;

  CVec vec(int i) const { return vectors.col(i); }
};

// Outcome distribution. Entries may carry round-off as low as -1e-12 and are
// clamped to zero on read; the sum is 1 within 1e-10.
class ProbVector {
 public:
  ProbVector() = default;
  static ProbVector checked(std::vector<double> entries);

  double operator[](std::size_t i) const { return entries_[i] < 0.0 ? 0.0 : entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  std::vector<double> clamped() const;

 private:
  std::vector<double> entries_;
};

// Kronecker product with block ordering a_ij * b.
CMat tensor(const CMat& a, const CMat& b);
CVec tensor(const CVec& a, const CVec& b);

// Reduced state on the kept subsystems (indices into state.dims, ascending
// output order). Throws DimensionError on a bad index set.
QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep);

// Swaps the two subsystems of a bipartite state.
QuantumState swap_subsystems(const QuantumState& state);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  CMat eigenvectors;                // column k pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix (input must be Hermitian within
// 1e-8). Reconstruction V L V^dag matches the input within 1e-9.
Spectrum hermitian_spectrum(const CMat& m);

double largest_singular_value(const CMat& m);
// Squared top singular value; cheaper and what the majorization frame needs.
double top_singular_value_squared(const CMat& m);

// Invariant checks. The free check_* functions report violations without
// throwing; make_* / validate_* return the checked object or throw
// ValidationError carrying the full violation list.
std::vector<Violation> check_state(const CMat& m, const std::vector<int>& dims);
std::vector<Violation> check_basis(const CMat& vectors);

QuantumState make_state(CMat m, std::vector<int> dims);
ProjectiveBasis make_basis(CMat vectors);
QuantumState validate_state(const CMat& m, const std::vector<int>& dims);
ProjectiveBasis validate_basis(const std::vector<CVec>& vectors);

}  // namespace eub
