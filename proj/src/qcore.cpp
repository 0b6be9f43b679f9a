#include "eub/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace eub {

ProbVector ProbVector::checked(std::vector<double> entries) {
  std::vector<Violation> bad;
  double sum = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < -tol::prob_floor) {
      bad.push_back({"prob_nonnegative", -entries[i],
                     "entry " + std::to_string(i) + " = " + std::to_string(entries[i])});
    }
    sum += entries[i];
  }
  if (std::abs(sum - 1.0) > tol::validate) {
    bad.push_back({"prob_normalized", std::abs(sum - 1.0), "sum = " + std::to_string(sum)});
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  ProbVector p;
  p.entries_ = std::move(entries);
  return p;
}

std::vector<double> ProbVector::clamped() const {
  std::vector<double> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = (*this)[i];
  return out;
}

CMat tensor(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec tensor(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {

// Strides of a row-major multi-index over `dims` (subsystem 0 most
// significant, matching the tensor() block ordering).
std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> stride(dims.size());
  int acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] = acc;
    acc *= dims[static_cast<std::size_t>(i)];
  }
  return stride;
}

// Flat offsets of every multi-index combination over the chosen subsystems.
std::vector<int> offsets_of(const std::vector<int>& subsystems, const std::vector<int>& dims,
                            const std::vector<int>& stride) {
  std::vector<int> offsets{0};
  for (int s : subsystems) {
    std::vector<int> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dims[static_cast<std::size_t>(s)]));
    for (int base : offsets)
      for (int x = 0; x < dims[static_cast<std::size_t>(s)]; ++x)
        next.push_back(base + x * stride[static_cast<std::size_t>(s)]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep) {
  const auto& dims = state.dims;
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw DimensionError("partial_trace: empty keep set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw DimensionError("partial_trace: subsystem index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw DimensionError("partial_trace: keep indices must be strictly ascending");
  }

  std::vector<int> traced;
  for (int s = 0; s < n; ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  const auto stride = strides_of(dims);
  const auto kept_off = offsets_of(keep, dims, stride);
  const auto traced_off = offsets_of(traced, dims, stride);

  const int dk = static_cast<int>(kept_off.size());
  CMat out = CMat::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (int t : traced_off) acc += state.rho(kept_off[static_cast<std::size_t>(i)] + t,
                                               kept_off[static_cast<std::size_t>(j)] + t);
      out(i, j) = acc;
    }

  QuantumState reduced;
  for (int s : keep) reduced.dims.push_back(dims[static_cast<std::size_t>(s)]);
  reduced.rho = std::move(out);
  return reduced;
}

QuantumState swap_subsystems(const QuantumState& state) {
  if (!state.bipartite()) throw DimensionError("swap_subsystems: state is not bipartite");
  const int da = state.dims[0], db = state.dims[1];
  const int total = da * db;
  std::vector<int> perm(static_cast<std::size_t>(total));
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      perm[static_cast<std::size_t>(a * db + b)] = b * da + a;
  CMat out(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = state.rho(i, j);
  return QuantumState{{db, da}, std::move(out)};
}

Spectrum hermitian_spectrum(const CMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_spectrum: matrix not square");
  const double herm_err = max_abs(m - m.adjoint());
  if (herm_err > tol::derived)
    throw ValidationError({{"hermitian", herm_err, "input to hermitian_spectrum"}});

  const CMat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success)
    throw ConsistencyError("hermitian_spectrum: eigensolver failed to converge");

  const int d = static_cast<int>(m.rows());
  Spectrum spec;
  spec.eigenvalues.resize(static_cast<std::size_t>(d));
  spec.eigenvectors.resize(d, d);
  for (int k = 0; k < d; ++k) {  // Eigen sorts ascending; flip to descending
    spec.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(d - 1 - k);
    spec.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
  }

  CMat recon = CMat::Zero(d, d);
  for (int k = 0; k < d; ++k)
    recon += spec.eigenvalues[static_cast<std::size_t>(k)] * spec.eigenvectors.col(k) *
             spec.eigenvectors.col(k).adjoint();
  const double rec_err = max_abs(recon - sym);
  if (rec_err > tol::reconstruct)
    throw ConsistencyError("hermitian_spectrum: reconstruction error " + std::to_string(rec_err));
  return spec;
}

double largest_singular_value(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double top_singular_value_squared(const CMat& m) {
  const CMat gram = (m.cols() <= m.rows()) ? CMat(m.adjoint() * m) : CMat(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConsistencyError("top_singular_value_squared: eigensolver failed");
  const double top = solver.eigenvalues().maxCoeff();
  return top < 0.0 ? 0.0 : top;
}

std::vector<Violation> check_state(const CMat& m, const std::vector<int>& dims) {
  std::vector<Violation> bad;
  if (dims.empty()) bad.push_back({"dims_nonempty", 1.0, "no subsystem dimensions"});
  long long prod = 1;
  for (int d : dims) {
    if (d < 2) bad.push_back({"dim_at_least_two", 2.0 - d, "dim = " + std::to_string(d)});
    prod *= d;
  }
  if (m.rows() != m.cols()) {
    bad.push_back({"square", static_cast<double>(std::abs(m.rows() - m.cols())),
                   std::to_string(m.rows()) + "x" + std::to_string(m.cols())});
    return bad;  // nothing else is meaningful
  }
  if (!dims.empty() && m.rows() != prod) {
    bad.push_back({"side_matches_dims", static_cast<double>(std::abs(m.rows() - prod)),
                   "side " + std::to_string(m.rows()) + " vs dims product " +
                       std::to_string(prod)});
    return bad;
  }

  const double herm = max_abs(m - m.adjoint());
  if (herm > tol::validate) bad.push_back({"hermitian", herm, ""});

  const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_err > tol::validate) bad.push_back({"unit_trace", tr_err, ""});

  Eigen::SelfAdjointEigenSolver<CMat> solver((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    bad.push_back({"psd", 1.0, "eigensolver failed"});
  } else {
    const double lo = solver.eigenvalues().minCoeff();
    if (lo < -tol::validate) bad.push_back({"psd", -lo, "smallest eigenvalue"});
  }
  return bad;
}

std::vector<Violation> check_basis(const CMat& vectors) {
  std::vector<Violation> bad;
  if (vectors.rows() != vectors.cols() || vectors.rows() < 2) {
    bad.push_back({"basis_shape", 1.0,
                   std::to_string(vectors.rows()) + "x" + std::to_string(vectors.cols())});
    return bad;
  }
  const CMat gram = vectors.adjoint() * vectors;
  const double err = max_abs(gram - CMat::Identity(vectors.rows(), vectors.cols()));
  if (err > tol::validate) bad.push_back({"orthonormal", err, "Gram deviation from identity"});
  return bad;
}

QuantumState make_state(CMat m, std::vector<int> dims) {
  auto bad = check_state(m, dims);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return QuantumState{std::move(dims), std::move(m)};
}

ProjectiveBasis make_basis(CMat vectors) {
  auto bad = check_basis(vectors);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  ProjectiveBasis b;
  b.dim = static_cast<int>(vectors.rows());
  b.vectors = std::move(vectors);
  return b;
}

QuantumState validate_state(const CMat& m, const std::vector<int>& dims) {
  return make_state(m, dims);
}

ProjectiveBasis validate_basis(const std::vector<CVec>& vectors) {
  if (vectors.empty()) throw ValidationError("basis has no vectors");
  const Eigen::Index d = vectors.front().size();
  CMat cols(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw ValidationError("basis vectors have mixed lengths");
    cols.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return make_basis(std::move(cols));
}

}  // namespace eub
