#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/steppairs.hpp"

namespace pauli::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  double angle() { return uniform(-kPi, kPi); }
  complex unimodular() { return std::polar(1.0, angle()); }
  complex complex_in_disc(double r) { return std::polar(uniform(0.0, r), angle()); }

  StepVector step_vector(int n, double r = 2.0) {
    std::vector<complex> v(static_cast<std::size_t>(n));
    for (auto& z : v) z = complex_in_disc(r);
    return StepVector(v);
  }

  FamilyParamsSol2 sol2() { return {uniform(-3.0, 3.0), angle(), angle(), angle()}; }

  // Away from the degenerate set so absolute tolerances stay meaningful.
  FamilyParamsSol3 sol3() {
    for (;;) {
      FamilyParamsSol3 p{uniform(0.2, 5.0) * (coin() ? 1.0 : -1.0), angle(), angle(), angle()};
      if (std::abs(std::sin(p.phi)) > 0.1 && std::abs(std::sin(p.psi)) > 0.1 &&
          std::abs(std::sin(p.psi - p.phi)) > 0.1)
        return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// rho_k by the defining double loop over the step function's samples:
// integral of h_b(x + k) conj(h_b(x)) dx with unit steps.
inline std::vector<complex> oracle_autocorrelation(const std::vector<complex>& b) {
  const std::size_t n = b.size();
  std::vector<complex> rho(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j + k) rho[k] += b[i] * std::conj(b[j]);
  return rho;
}

// |h_b^(y)| by quadrature of the explicit step function, one panel set per step.
inline double oracle_step_fourier_abs(const StepVector& b, double y) {
  complex s{};
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double lo = static_cast<double>(j);
    s += integrate([&](double x) { return b[j] * std::polar(1.0, -y * x); }, lo, lo + 1.0,
                   8 + static_cast<int>(std::abs(y)));
  }
  return std::abs(s);
}

// J_0(1) from its power series.
inline double oracle_bessel_j0(double x) {
  double term = 1.0, sum = 1.0;
  for (int m = 1; m < 40; ++m) {
    term *= -(x * x / 4.0) / (m * m);
    sum += term;
  }
  return sum;
}

inline double max_abs_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace pauli::testing
