#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "eub/types.hpp"

namespace eub::rng {

// All randomness in the toolkit flows through the generators below so that
// runs are reproducible bit-for-bit given a seed. The stream is:
//   engine   std::mt19937_64 (fully specified by the C++ standard)
//   uniform  (x >> 11) * 2^-53                    in [0, 1)
//   uniform+ ((x >> 11) + 1) * 2^-53              in (0, 1]
//   normal   Box-Muller on (uniform+, uniform) pairs, both outputs consumed
// Derived seeds use the splitmix64 chain in derive(), so independent
// instances (fuzz cases, optimizer restarts) can run in parallel without
// sharing a stream.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
  std::uint64_t x = splitmix64(seed ^ splitmix64(a));
  x = splitmix64(x ^ splitmix64(b));
  return splitmix64(x ^ splitmix64(c));
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// d x d matrix of standard complex Gaussians, filled row-major.
CMat ginibre_matrix(Stream& s, int rows, int cols);

// Random density matrix G G^dag / tr(G G^dag) on the given total dimension.
CMat ginibre_state_matrix(Stream& s, int dim);

// Haar-style random unitary: QR of a Ginibre matrix with the phases fixed so
// the R diagonal is positive real (the unique such factorization).
CMat haar_unitary(Stream& s, int dim);

// Unit vector with Haar-distributed direction.
CVec haar_vector(Stream& s, int dim);

}  // namespace eub::rng
