#pragma once

// Grids, composite Gauss-Legendre quadrature and Fourier primitives.
//
// Transform convention used everywhere in the library:
//   f^(y) = integral of exp(-i*x*y) f(x) dx
// and, for 2pi-periodic f,
//   f~(k) = (1/2pi) integral_0^{2pi} f(t) exp(-i*k*t) dt.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pauli {

using complex = std::complex<double>;
using ComplexFn = std::function<complex(double)>;
using RealFn = std::function<double(double)>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A violated precondition or malformed input.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-finite integrand value; carries the abscissa where it appeared.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(double abscissa);
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// A consistency check that should be impossible to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Uniform cell-centred sample points lo + (i + offset) * (hi - lo) / count.
class Grid {
 public:
  Grid(double lo, double hi, std::size_t count, double offset = 0.5);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t count() const noexcept { return count_; }
  double offset() const noexcept { return offset_; }
  double spacing() const noexcept { return (hi_ - lo_) / static_cast<double>(count_); }

  double operator[](std::size_t i) const noexcept {
    return lo_ + (static_cast<double>(i) + offset_) * spacing();
  }
  std::vector<double> points() const;

  bool operator==(const Grid&) const = default;

 private:
  double lo_;
  double hi_;
  std::size_t count_;
  double offset_;
};

/// [-50, 50] with 4001 points, offset 0.5.
Grid default_frequency_grid();

/// Complex samples on a grid. Values outside `support` (when present) are
/// exactly zero; between samples the function is read by local cubic
/// interpolation.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<complex> values,
                  std::optional<Interval> support = std::nullopt);

  static SampledFunction sample(const ComplexFn& f, const Grid& grid,
                                std::optional<Interval> support = std::nullopt);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<complex>& values() const noexcept { return values_; }
  const std::optional<Interval>& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return values_.size(); }
  complex operator[](std::size_t i) const noexcept { return values_[i]; }

  /// Four-point Lagrange interpolation; zero outside the support hint.
  complex operator()(double x) const;

  double sup_norm() const;
  /// Midpoint-rule L2 norm over the grid.
  double l2_norm() const;

 private:
  Grid grid_;
  std::vector<complex> values_;
  std::optional<Interval> support_;
};

/// A sampled function together with (optionally) its sampled transform or,
/// for periodic functions, its Fourier coefficients on an integer grid.
struct Signal {
  SampledFunction space;
  std::optional<SampledFunction> spectrum;
};

/// C-infinity bump amplitude * exp(-1/(t(1-t))), t = (x - lo)/(hi - lo),
/// supported on the open interval.
struct SmoothBump {
  Interval interval;
  double amplitude = 1.0;

  SmoothBump(Interval support, double amp = 1.0);
  double operator()(double x) const noexcept;
};

double bump_eval(const SmoothBump& b, double x);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

inline constexpr int kGaussOrder = 16;

struct GaussLegendreTable {
  std::array<double, kGaussOrder> nodes;    // on [-1, 1], ascending
  std::array<double, kGaussOrder> weights;
};

const GaussLegendreTable& gauss_legendre();

/// Nodes and weights of the 16-point Gauss-Legendre rule applied on each
/// segment between consecutive breakpoints.
class CompositeRule {
 public:
  CompositeRule(double lo, double hi, int panels);
  explicit CompositeRule(std::span<const double> breakpoints);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  void add_panel(double a, double b);

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Panel count keeping (max_frequency * panel_width / 2) <= 4, the regime where
/// 16-point panels integrate exp(i*w*x) to rounding level.
int panels_for(double length, double max_frequency, int min_panels = 1);

template <class F>
complex integrate(F&& f, const CompositeRule& rule) {
  complex sum{0.0, 0.0};
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const complex v = f(x[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw EvaluationError(x[i]);
    sum += w[i] * v;
  }
  return sum;
}

template <class F>
complex integrate(F&& f, double lo, double hi, int panels) {
  return integrate(std::forward<F>(f), CompositeRule(lo, hi, panels));
}

/// Composite Gauss-Legendre approximation of the integral of f over [lo, hi].
complex quad_integrate(const ComplexFn& f, double lo, double hi, int panels);

/// sum_i w_i v_i exp(-i y_j x_i) for every y_j of a uniform grid.
std::vector<complex> fourier_sum(const CompositeRule& rule, std::span<const complex> values,
                                 const Grid& y_grid);

/// Transform of an evaluable function supported in `support`, at one frequency.
complex fourier_transform_at(const ComplexFn& f, const Interval& support, double y, int panels);

/// Transform of an evaluable function on a frequency grid. panels = 0 picks a
/// count from the largest |y| on the grid.
SampledFunction fourier_transform(const ComplexFn& f, const Interval& support,
                                  const Grid& y_grid, int panels = 0);

/// Transform of a sampled function through its interpolant. Requires a
/// bounded support hint.
SampledFunction fourier_transform(const SampledFunction& f, const Grid& y_grid);

/// (1/2pi) integral_0^{2pi} f(t) exp(-ikt) dt.
complex fourier_coeff_periodic(const ComplexFn& f, int k, int panels);

/// Coefficients for k = -k_max..k_max (index k + k_max).
std::vector<complex> fourier_coeffs_periodic(const ComplexFn& f, int k_max, int panels);

// ---------------------------------------------------------------------------
// Rank test
// ---------------------------------------------------------------------------

/// Smallest over largest singular value of the 2 x N matrix with rows f and g,
/// via a re-orthogonalised QR step. Zero when either row vanishes.
double independence_ratio(std::span<const complex> f, std::span<const complex> g);

/// Two vectors count as linearly independent when the ratio reaches this.
inline constexpr double kIndependenceThreshold = 1e-8;

}  // namespace pauli
