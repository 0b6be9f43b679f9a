#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eub {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

namespace tol {
// Global tolerance tiers: object validation, spectral reconstruction,
// comparison of derived quantities.
inline constexpr double validate = 1e-10;
inline constexpr double reconstruct = 1e-9;
inline constexpr double derived = 1e-8;
// Probabilities below this are treated as zero branches.
inline constexpr double prob_floor = 1e-12;
}  // namespace tol

// One failed invariant: which one, by how much.
struct Violation {
  std::string invariant;
  double magnitude = 0.0;
  std::string detail{};
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what), violations_{{what, 0.0, ""}} {}
  ValidationError(const std::string& what, std::vector<Violation> violations)
      : std::runtime_error(what + " — " + describe(violations)),
        violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string s = "validation failed:";
    for (const auto& v : vs) {
      s += " [" + v.invariant + " off by " + std::to_string(v.magnitude);
      if (!v.detail.empty()) s += "; " + v.detail;
      s += "]";
    }
    return s;
  }
  std::vector<Violation> violations_;
};

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two algebraic routes to the same quantity disagreed; a bug, not bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace eub
