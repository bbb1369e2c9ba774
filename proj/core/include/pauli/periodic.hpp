#pragma once

// Periodic UZD sets from Rademacher-modulated bumps.
//
// With P = 2pi / 2^n, member j (0-based) is a_j(x) r_j(x / 2pi), where a_j is
// P-periodic. Its Fourier coefficients vanish on a fixed residue pattern that
// is disjoint from the other members' patterns.

#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/report.hpp"

namespace pauli {

/// True when the fractional part of x has denominator at most 2^32. Such
/// points are the jumps of every r_j we use.
bool is_binary_rational(double x);

/// r_0 = 1; for j >= 1, +1 / -1 by the j-th binary digit of {x}, 0 at binary
/// rationals.
int rademacher(int j, double x);

class PeriodicModulation {
 public:
  /// base must be (2pi / 2^n)-periodic (checked at sample points to 1e-10);
  /// 0 <= j <= n - 1.
  PeriodicModulation(ComplexFn base, int j, int n);

  int j() const noexcept { return j_; }
  int n() const noexcept { return n_; }
  double period() const noexcept { return kTwoPi / static_cast<double>(1 << n_); }
  const ComplexFn& base() const noexcept { return base_; }

  /// base(x) r_j(x / 2pi).
  complex operator()(double x) const;

 private:
  ComplexFn base_;
  int j_;
  int n_;
};

complex modulate(const PeriodicModulation& pm, double x);

/// Coefficient k of member j in an n-member set is forced to vanish when
/// j = 0 and 2^n does not divide k, or j >= 1 and either 2^{j-1} does not
/// divide k or 2^j divides k.
bool is_forbidden_index(int j, int n, int k);

/// Panel count for [0, 2pi]: a multiple of 2^n, so every period of the base
/// and every Rademacher cell sees the same nodes.
int periodic_panels(int n, int k_max);

/// Fourier coefficients for k = -k_max..k_max (index k + k_max).
std::vector<complex> periodic_coefficients(const PeriodicModulation& pm, int k_max);

/// "forbidden": largest forbidden-index coefficient over the largest overall;
/// "allowed": largest allowed-index coefficient, which must reach tol.
/// Requires k_max >= 2^n and a non-degenerate base.
VerificationReport vanishing_pattern_check(const PeriodicModulation& pm, int k_max, double tol);

/// Space samples on x_grid with the coefficients on the integer grid
/// [-k_max, k_max] as the spectrum.
Signal periodic_signal(const PeriodicModulation& pm, const Grid& x_grid, int k_max);

/// n members; the j-th base is a unit bump on the j-th of n guarded
/// subintervals of one period, repeated. 2 <= n <= 8.
std::vector<PeriodicModulation> uzd_periodic(int n);

}  // namespace pauli
