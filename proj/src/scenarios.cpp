#include "eub/scenarios.hpp"

#include <cmath>

namespace eub {

namespace {

constexpr double pi = 3.14159265358979323846;

void require_range(double x, double lo, double hi, const std::string& name) {
  if (!(x >= lo && x <= hi))
    throw ValidationError({{name + "_range", std::max(lo - x, x - hi),
                            name + " = " + std::to_string(x)}});
}

ProjectiveBasis standard_basis(int d) { return make_basis(CMat::Identity(d, d)); }

}  // namespace

ProjectiveBasis qubit_basis_standard() { return standard_basis(2); }

ProjectiveBasis qubit_basis_tilted() {
  CMat v(2, 2);
  v << Complex(0.5, 0.0), Complex(std::sqrt(3.0) / 2.0, 0.0),
      Complex(-std::sqrt(3.0) / 2.0, 0.0), Complex(0.5, 0.0);
  return make_basis(std::move(v));
}

Scenario rho1_scenario(double theta) {
  require_range(theta, 0.0, pi / 2.0, "theta");
  const double c = std::cos(theta), s = std::sin(theta);
  CMat rho(2, 2);
  rho << Complex(0.5 * (c * c + 0.5), 0.0), Complex(0.5 * c * s, 0.0),
      Complex(0.5 * c * s, 0.0), Complex(0.5 * (s * s + 0.5), 0.0);
  Scenario sc;
  sc.name = "rho1";
  sc.state = make_state(std::move(rho), {2});
  sc.bases = {qubit_basis_standard(), qubit_basis_tilted()};
  sc.params = {{"theta", theta}};
  sc.memory_side = MemorySide::None;
  return sc;
}

Scenario rho2_scenario(double theta) {
  require_range(theta, 0.0, pi / 2.0, "theta");
  const double c = std::cos(theta), s = std::sin(theta);
  CMat rho = CMat::Zero(2, 2);
  rho(0, 0) = c * c;
  rho(1, 1) = s * s;
  Scenario sc;
  sc.name = "rho2";
  sc.state = make_state(std::move(rho), {2});
  sc.bases = {qubit_basis_standard(), qubit_basis_tilted()};
  sc.params = {{"theta", theta}};
  sc.memory_side = MemorySide::None;
  return sc;
}

Scenario horodecki_scenario(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError({{"p_range", p <= 0.0 ? -p : p - 1.0, "p = " + std::to_string(p)}});
  const double n = 1.0 / (1.0 + 7.0 * p);
  const double h = 0.5 * (1.0 + p);
  const double g = 0.5 * std::sqrt(1.0 - p * p);

  Eigen::MatrixXd m(8, 8);
  m << p, 0, 0, 0, 0, p, 0, 0,
       0, p, 0, 0, 0, 0, p, 0,
       0, 0, p, 0, 0, 0, 0, p,
       0, 0, 0, p, 0, 0, 0, 0,
       0, 0, 0, 0, h, 0, 0, g,
       p, 0, 0, 0, 0, p, 0, 0,
       0, p, 0, 0, 0, 0, p, 0,
       0, 0, p, 0, g, 0, 0, h;

  Scenario sc;
  sc.name = "horodecki";
  sc.state = make_state(CMat((n * m).cast<Complex>()), {2, 4});
  const EqualOverlapChain chain = equal_overlap_chain();
  sc.bases = {chain.m1, chain.m2, chain.m3, chain.m4};
  sc.params = {{"p", p}};
  sc.memory_side = MemorySide::A;
  return sc;
}

EqualOverlapChain equal_overlap_chain() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r6 = 1.0 / std::sqrt(6.0);

  CMat m1v(4, 4);
  m1v << r2, r2, 0, 0,
         -r2, r2, 0, 0,
         0, 0, r2, r2,
         0, 0, r2, -r2;

  CMat m2v(4, 4);
  m2v << std::sqrt(2.0) * r6, std::sqrt(3.0) * r6, 1.0 * r6, 0,
         std::sqrt(2.0) * r6, 0, -2.0 * r6, 0,
         std::sqrt(2.0) * r6, -std::sqrt(3.0) * r6, 1.0 * r6, 0,
         0, 0, 0, 1;

  EqualOverlapChain chain;
  chain.m1 = make_basis(m1v);
  chain.m2 = make_basis(m2v);
  chain.m3 = chain.m2;

  // U maps each first-pair vector onto the matching second-pair vector, so
  // applying it once more yields a fourth basis whose overlaps with the
  // third reproduce the first pair's overlaps.
  const CMat u = m2v * m1v.adjoint();
  chain.m4 = make_basis(CMat(u * m2v));

  const Eigen::MatrixXd first = (m1v.adjoint() * m2v).cwiseAbs2();
  const Eigen::MatrixXd second = (chain.m3.vectors.adjoint() * chain.m4.vectors).cwiseAbs2();
  if ((first - second).cwiseAbs().maxCoeff() > tol::validate)
    throw ConsistencyError("equal-overlap construction: overlap matrices differ");

  double max_diag = 0.0;
  const CMat cross = m1v.adjoint() * chain.m4.vectors;
  for (int i = 0; i < 4; ++i) max_diag = std::max(max_diag, std::norm(cross(i, i)));
  if (max_diag >= 1.0 - 1e-6)
    throw ConsistencyError("equal-overlap construction: fourth basis collapsed onto the first");
  return chain;
}

Scenario werner_scenario(double p, double theta) {
  require_range(p, 0.0, 1.0, "p");
  require_range(theta, 0.0, 2.0 * pi, "theta");
  CVec bell(4);
  bell << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0);
  bell /= std::sqrt(2.0);
  CMat rho = 0.25 * (1.0 - p) * CMat::Identity(4, 4) + p * (bell * bell.adjoint());

  const double r2 = 1.0 / std::sqrt(2.0);
  CMat b1(2, 2);
  b1 << r2, r2,
        -r2, r2;
  CMat b2(2, 2);
  b2 << std::cos(theta), std::sin(theta),
        -std::sin(theta), std::cos(theta);

  Scenario sc;
  sc.name = "werner";
  sc.state = make_state(std::move(rho), {2, 2});
  sc.bases = {make_basis(std::move(b1)), make_basis(std::move(b2))};
  sc.params = {{"p", p}, {"theta", theta}};
  sc.memory_side = MemorySide::B;
  return sc;
}

ProjectiveBasis fourier_basis(int d) {
  CMat v(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double phase = 2.0 * pi * j * k / d;
      v(j, k) = Complex(std::cos(phase), std::sin(phase)) / std::sqrt(static_cast<double>(d));
    }
  return make_basis(std::move(v));
}

Scenario bell_scenario(int d) {
  if (d < 2) throw ValidationError("bell scenario needs dimension at least 2");
  CVec psi = CVec::Zero(d * d);
  for (int i = 0; i < d; ++i) psi(i * d + i) = Complex(1.0, 0.0);
  psi /= std::sqrt(static_cast<double>(d));

  Scenario sc;
  sc.name = "bell";
  sc.state = make_state(CMat(psi * psi.adjoint()), {d, d});
  sc.bases = {standard_basis(d), fourier_basis(d)};
  sc.params = {{"d", static_cast<double>(d)}};
  sc.memory_side = MemorySide::B;
  return sc;
}

}  // namespace eub
