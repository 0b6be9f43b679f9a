#include "eub/rng.hpp"

#include <Eigen/QR>

namespace eub::rng {

CMat ginibre_matrix(Stream& s, int rows, int cols) {
  CMat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = s.cnormal();
  return g;
}

CMat ginibre_state_matrix(Stream& s, int dim) {
  const CMat g = ginibre_matrix(s, dim, dim);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return rho;
}

CMat haar_unitary(Stream& s, int dim) {
  const CMat g = ginibre_matrix(s, dim, dim);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR();
  // G = QR is unique once the R diagonal is made positive real; fold the
  // phases into Q so the factor is that canonical one.
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    q.col(k) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

CVec haar_vector(Stream& s, int dim) {
  CVec v(dim);
  double n = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = s.cnormal();
    n = v.norm();
  } while (n < 1e-12);
  return v / n;
}

}  // namespace eub::rng
