#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "eub/entropy.hpp"
#include "eub/qcore.hpp"
#include "eub/rng.hpp"
#include "oracles.hpp"

using namespace eub;

namespace {

QuantumState bell_pair(int d) {
  CVec v = CVec::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = Complex(1.0 / std::sqrt(static_cast<double>(d)));
  return make_state(v * v.adjoint(), {d, d});
}

QuantumState diag_state(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  CMat m = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Complex(p[static_cast<std::size_t>(i)]);
  return make_state(m, {n});
}

ProjectiveBasis standard_basis(int d) { return make_basis(CMat::Identity(d, d)); }

}  // namespace

TEST_CASE("shannon entropy on known distributions") {
  CHECK(shannon(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(shannon(std::vector<double>{1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(std::abs(shannon(std::vector<double>{0.75, 0.25}) - oracle::pins::h_three_quarters) <
        1e-14);
  const ProbVector p = ProbVector::checked({0.125, 0.125, 0.25, 0.5});
  CHECK(shannon(p) == doctest::Approx(1.75));
}

TEST_CASE("von Neumann entropy from spectra") {
  CHECK(von_neumann(diag_state({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));
  CHECK(von_neumann(diag_state({1.0, 0.0})) == doctest::Approx(0.0).epsilon(1e-12));

  // Basis changes leave it alone.
  rng::Stream s(31);
  const CMat u = rng::haar_unitary(s, 3);
  const QuantumState rho = diag_state({0.6, 0.3, 0.1});
  const QuantumState rotated = make_state(u * rho.rho * u.adjoint(), {3});
  CHECK(von_neumann(rotated) == doctest::Approx(von_neumann(rho)).epsilon(1e-10));
}

TEST_CASE("relative entropy: nonnegative, zero on equals, infinite off-support") {
  rng::Stream s(32);
  const QuantumState rho = make_state(rng::ginibre_state_matrix(s, 3), {3});
  const QuantumState sigma = make_state(rng::ginibre_state_matrix(s, 3), {3});
  CHECK(relative_entropy(rho, sigma) >= -1e-10);
  CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));

  const QuantumState e0 = diag_state({1.0, 0.0});
  const QuantumState e1 = diag_state({0.0, 1.0});
  CHECK(std::isinf(relative_entropy(e0, e1)));

  CHECK_THROWS_AS(relative_entropy(rho, diag_state({0.5, 0.5})), DimensionError);
}

TEST_CASE("measurement probabilities on both subsystems") {
  const QuantumState bell = bell_pair(3);
  const ProbVector p = measurement_probs(bell, standard_basis(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(p[i] == doctest::Approx(1.0 / 3));

  // A product state factorizes: the memory-side distribution is rho_b's.
  const QuantumState ab =
      make_state(tensor(diag_state({0.7, 0.3}).rho, diag_state({0.2, 0.8}).rho), {2, 2});
  const ProbVector pb = measurement_probs(ab, standard_basis(2), 1);
  CHECK(pb[0] == doctest::Approx(0.2));
  CHECK(pb[1] == doctest::Approx(0.8));

  CHECK_THROWS_AS(measurement_probs(ab, standard_basis(3)), DimensionError);
  CHECK_THROWS_AS(measurement_probs(ab, standard_basis(2), 2), DimensionError);
}

TEST_CASE("post-measurement state kills coherences between outcomes") {
  rng::Stream s(33);
  const QuantumState st = make_state(rng::ginibre_state_matrix(s, 6), {2, 3});
  const ProjectiveBasis m = make_basis(rng::haar_unitary(s, 2));

  const QuantumState after = post_measurement_state(st, m);
  CHECK(after.dims == st.dims);
  CHECK(std::abs(after.rho.trace().real() - 1.0) < 1e-10);

  // In the measurement eigenbasis the off-diagonal blocks vanish and the
  // diagonal blocks are the unnormalized conditional states.
  const CMat big = tensor(m.vectors, CMat::Identity(3, 3));
  const CMat blocks = big.adjoint() * after.rho * big;
  CHECK(max_abs(blocks.block(0, 3, 3, 3)) < 1e-12);
  CHECK(max_abs(blocks.block(3, 0, 3, 3)) < 1e-12);

  const auto oracle_e = oracle::ensemble_by_projectors(st, m);
  CHECK(max_abs(blocks.block(0, 0, 3, 3) - oracle_e.probs[0] * oracle_e.states[0]) < 1e-12);
  CHECK(max_abs(blocks.block(3, 3, 3, 3) - oracle_e.probs[1] * oracle_e.states[1]) < 1e-12);
}

TEST_CASE("conditional ensembles match the projector-algebra rebuild") {
  for (std::uint64_t seed : {41u, 42u}) {
    rng::Stream s(seed);
    const QuantumState st = make_state(rng::ginibre_state_matrix(s, 6), {3, 2});
    const ProjectiveBasis m = make_basis(rng::haar_unitary(s, 3));

    const ConditionalEnsemble e = conditional_ensemble(st, m, "m");
    const auto ref = oracle::ensemble_by_projectors(st, m);
    REQUIRE(e.probs.size() == 3);
    CMat avg = CMat::Zero(2, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(e.probs[i] - ref.probs[i]) < 1e-12);
      if (!e.negligible[i]) {
        CHECK(max_abs(e.states[i].rho - ref.states[i]) < 1e-10);
        avg += e.probs[i] * e.states[i].rho;
      }
    }
    CHECK(max_abs(avg - partial_trace(st, {1}).rho) < 1e-10);
    CHECK(e.basis_label == "m");
  }
}

TEST_CASE("branches with no weight are flagged negligible") {
  // |0><0| (x) rho_b measured in the standard basis: outcome 1 never fires.
  rng::Stream s(43);
  const CMat rho_b = rng::ginibre_state_matrix(s, 2);
  const QuantumState st = make_state(tensor(diag_state({1.0, 0.0}).rho, rho_b), {2, 2});
  const ConditionalEnsemble e = conditional_ensemble(st, standard_basis(2));
  CHECK_FALSE(e.negligible[0]);
  CHECK(e.negligible[1]);
  CHECK(e.probs[1] == 0.0);
}

TEST_CASE("holevo terms separate classical from quantum correlations") {
  rng::Stream s(44);
  const CMat rho_b = rng::ginibre_state_matrix(s, 3);
  const QuantumState product =
      make_state(tensor(diag_state({0.7, 0.3}).rho, rho_b), {2, 3});
  const QuantumState reduced_b = partial_trace(product, {1});

  const ConditionalEnsemble pe = conditional_ensemble(product, standard_basis(2));
  const HolevoTerms pt = holevo_terms(pe, reduced_b);
  CHECK(pt.chi_m == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(pt.S_m == doctest::Approx(von_neumann(reduced_b)).epsilon(1e-9));

  const QuantumState bell = bell_pair(3);
  const ConditionalEnsemble be = conditional_ensemble(bell, standard_basis(3));
  const HolevoTerms bt = holevo_terms(be, partial_trace(bell, {1}));
  CHECK(bt.S_m == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(bt.chi_m == doctest::Approx(std::log2(3.0)));

  // The ensemble must actually average to the supplied memory state.
  CHECK_THROWS_AS(holevo_terms(pe, diag_state({1.0 / 3, 1.0 / 3, 1.0 / 3})), ValidationError);
}

TEST_CASE("entropy report keeps its internal identities exactly") {
  rng::Stream s(45);
  const QuantumState st = make_state(rng::ginibre_state_matrix(s, 6), {2, 3});
  const EntropyReport r = entropy_report(st);
  CHECK(r.H_A_given_B == r.H_AB - r.H_B);
  CHECK(r.I_AB == r.H_A + r.H_B - r.H_AB);

  const EntropyReport b = entropy_report(bell_pair(2));
  CHECK(b.H_AB == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(b.H_A_given_B == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(b.I_AB == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("measured conditional entropy on reference states") {
  // Product state: the memory knows nothing, H(M|B) = H(M).
  rng::Stream s(46);
  const CMat rho_b = rng::ginibre_state_matrix(s, 2);
  const QuantumState product =
      make_state(tensor(diag_state({0.7, 0.3}).rho, rho_b), {2, 2});
  const ProjectiveBasis m = make_basis(rng::haar_unitary(s, 2));
  const double h_m = shannon(measurement_probs(product, m));
  CHECK(measured_conditional_entropy(product, m) == doctest::Approx(h_m).epsilon(1e-9));

  // Maximally entangled state measured in the standard basis: the memory
  // predicts the outcome perfectly.
  CHECK(measured_conditional_entropy(bell_pair(2), standard_basis(2)) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("empirical entropy is seeded and converges") {
  const ProbVector p = ProbVector::checked({0.5, 0.25, 0.25});
  const double a = empirical_entropy(p, 200000, 7);
  const double b = empirical_entropy(p, 200000, 7);
  CHECK(a == b);
  CHECK(std::abs(a - shannon(p)) < 0.01);
  CHECK(empirical_entropy(p, 200000, 8) != a);
  CHECK_THROWS_AS(empirical_entropy(p, 0, 7), ValidationError);
}
