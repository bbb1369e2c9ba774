#pragma once

// Non-step constructions: Moroz-Perelomov pairs, Ismagilov's shifted family,
// the interleaving operator f_{a,b}, UZD lines built from it, and the Pauli
// pairs obtained by combining UZD members.

#include <span>
#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/verify.hpp"

namespace pauli {

/// Raised when a truncated coefficient series leaves too much mass in its tail.
class CutoffError : public ContractError {
 public:
  using ContractError::ContractError;
};

// ---------------------------------------------------------------------------
// Moroz-Perelomov
// ---------------------------------------------------------------------------

/// rho symmetric about a/2 (rho(x) = rho(a - x)), supported in `support`.
struct MPParams {
  RealFn rho;
  RealFn phi;
  double a = 0.0;
  Interval support;
};

/// f1 = rho e^{i phi(x)}, f2 = rho e^{-i phi(a - x)} sampled on `grid`.
FunctionPair mp_pair(const MPParams& params, const Grid& grid);

// ---------------------------------------------------------------------------
// Ismagilov
// ---------------------------------------------------------------------------

struct IsmagilovParams {
  ComplexFn phase;  // 2pi-periodic, unimodular
  SmoothBump window;  // support length <= 1
  double shift = 0.0;
  int coeff_cutoff = 64;
};

/// g^(x) phase(x - shift), with g^ by quadrature over the window.
complex ismagilov_f(const IsmagilovParams& params, double x);

/// 2pi sum_{|k|<=K} |c_k| |g(k - y)| with c_k the phase's Fourier coefficients.
double ismagilov_fourier_abs_closed(const IsmagilovParams& params, double y);

/// Shared state for one (phase, window) choice: the phase coefficients and
/// the window transform on a fixed spatial quadrature mesh, so transforms of
/// f_a for several shifts reuse the same work.
class IsmagilovFamily {
 public:
  /// The mesh covers [-x_extent, x_extent] finely enough for frequencies up
  /// to max_frequency.
  IsmagilovFamily(ComplexFn phase, SmoothBump window, int coeff_cutoff = 64,
                  double x_extent = 160.0, double max_frequency = 64.0);

  const SmoothBump& window() const noexcept { return window_; }
  int cutoff() const noexcept { return cutoff_; }
  /// c_k for k = -K..K (index k + K).
  const std::vector<complex>& coefficients() const noexcept { return coeffs_; }
  /// sum of |c_k| over K < |k| <= 2K.
  double coefficient_tail() const noexcept { return tail_; }

  complex window_transform(double x) const;
  complex f(double shift, double x) const;
  double fourier_abs_closed(double y) const;

  /// Direct quadrature of f_shift^ over [-x_extent, x_extent].
  SampledFunction fourier_quadrature(double shift, const Grid& y_grid) const;
  SampledFunction sample(double shift, const Grid& x_grid) const;

 private:
  ComplexFn phase_;
  SmoothBump window_;
  int cutoff_;
  double x_extent_;
  double max_frequency_;
  std::vector<complex> coeffs_;
  double tail_ = 0.0;
  CompositeRule window_rule_;
  CompositeRule mesh_;
  std::vector<complex> window_hat_on_mesh_;
};

// ---------------------------------------------------------------------------
// Interleaving operator f_{a,b}(x) = sum_k a^(k) b(x + k)
// ---------------------------------------------------------------------------

/// a supported in [0, 2pi], b supported in [0, 1]; a^(k) for |k| <= K is
/// computed once at construction.
class InterleaveSpec {
 public:
  InterleaveSpec(ComplexFn a, Interval a_support, ComplexFn b, Interval b_support,
                 int k_cutoff = 64);
  InterleaveSpec(const SmoothBump& a, const SmoothBump& b, int k_cutoff = 64);

  /// Doubles the cutoff from k_start until the tail test passes.
  static InterleaveSpec with_auto_cutoff(const SmoothBump& a, const SmoothBump& b,
                                         int k_start = 64);

  int cutoff() const noexcept { return cutoff_; }
  const Interval& a_support() const noexcept { return a_support_; }
  const Interval& b_support() const noexcept { return b_support_; }

  complex a(double x) const;
  complex b(double x) const;
  /// a^(k) = 2pi a~(k), |k| <= cutoff.
  complex a_hat(int k) const;
  /// 2pi-periodisation of a.
  complex a_per(double y) const;
  complex b_hat(double y) const;

  /// Where f_{a,b} can be non-zero: [-K, K + 1].
  Interval support() const noexcept;
  double a_norm() const;
  double b_norm() const;

 private:
  void compute_coefficients();

  ComplexFn a_;
  ComplexFn b_;
  Interval a_support_;
  Interval b_support_;
  int cutoff_;
  std::vector<complex> a_hat_;
};

complex f_ab(const InterleaveSpec& spec, double x);
/// 2pi b^(y) a_per(y).
complex f_ab_fourier(const InterleaveSpec& spec, double y);
/// Direct quadrature of f_ab over its support, cell by cell.
complex f_ab_fourier_quadrature(const InterleaveSpec& spec, double y);
/// L2 norm of f_ab by quadrature over its support.
double f_ab_norm_quadrature(const InterleaveSpec& spec);

/// m bump pairs on equal-width, 20%-guarded disjoint subintervals of (0,1)
/// and (0,2pi); 2 <= m <= 64.
std::vector<InterleaveSpec> uzd_line(int m);

/// Grid over [-K-1, K+2] with `per_unit` samples per unit length.
Grid interleave_grid(int cutoff, int per_unit);

/// f_{a,b} sampled on x_grid with its closed-form transform on y_grid.
Signal interleave_signal(const InterleaveSpec& spec, const Grid& x_grid, const Grid& y_grid);

/// Scales space and spectrum by 1 / (grid L2 norm of the space samples).
Signal normalized(const Signal& s);

// ---------------------------------------------------------------------------
// Combinations
// ---------------------------------------------------------------------------

/// sum_n w_n c_n f_n on the common grid.
SampledFunction pauli_combine(std::span<const SampledFunction> fs, std::span<const double> c,
                              std::span<const complex> w);
/// Same, applied to the space samples and the spectra.
Signal pauli_combine(std::span<const Signal> fs, std::span<const double> c,
                     std::span<const complex> w);

/// f = sum c_n (f_{2n-1} + f_{2n}) / sqrt 2, g = sum c_n (f_{2n-1} - f_{2n}) / sqrt 2
/// from 2m unit-norm UZD members.
FunctionPair pauli_state_pair(std::span<const Signal> fs, std::span<const complex> coeffs);

}  // namespace pauli
