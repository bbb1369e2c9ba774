#include "pauli/periodic.hpp"

#include <algorithm>
#include <string>

namespace pauli {

namespace {

constexpr int kDyadicBits = 32;

bool divides(long long d, long long k) { return k % d == 0; }

}  // namespace

bool is_binary_rational(double x) {
  const double frac = x - std::floor(x);
  const double scaled = std::ldexp(frac, kDyadicBits);
  return scaled == std::floor(scaled);
}

int rademacher(int j, double x) {
  if (j < 0) throw ContractError("Rademacher index must be non-negative");
  if (!std::isfinite(x)) throw EvaluationError(x);
  if (j == 0) return 1;
  if (is_binary_rational(x)) return 0;
  const double frac = x - std::floor(x);
  const double digit = std::fmod(std::floor(std::ldexp(frac, j)), 2.0);
  return digit == 0.0 ? 1 : -1;
}

PeriodicModulation::PeriodicModulation(ComplexFn base, int j, int n)
    : base_(std::move(base)), j_(j), n_(n) {
  if (!base_) throw ContractError("periodic modulation needs a base function");
  if (n < 1 || n > 30) throw ContractError("set size n must be in [1, 30]");
  if (j < 0 || j > n - 1) throw ContractError("Rademacher index must satisfy 0 <= j <= n - 1");
  const double p = period();
  for (int i = 0; i < 97; ++i) {
    const double x = kTwoPi * (i + 0.29) / 97.0;
    const complex d = base_(x + p) - base_(x);
    if (!(std::abs(d) <= 1e-10))
      throw ContractError("base is not (2pi / 2^n)-periodic near x = " + std::to_string(x));
  }
}

complex PeriodicModulation::operator()(double x) const {
  const int r = rademacher(j_, x / kTwoPi);
  if (r == 0) return complex{};
  return static_cast<double>(r) * base_(x);
}

complex modulate(const PeriodicModulation& pm, double x) { return pm(x); }

bool is_forbidden_index(int j, int n, int k) {
  if (n < 1 || j < 0 || j > n - 1) throw ContractError("index pattern needs 0 <= j <= n - 1");
  const long long kk = k;
  if (j == 0) return !divides(1LL << n, kk);
  return !divides(1LL << (j - 1), kk) || divides(1LL << j, kk);
}

int periodic_panels(int n, int k_max) {
  const int cells = 1 << n;
  const int needed = panels_for(kTwoPi, std::max(1, k_max) + 64.0, 64);
  return ((needed + cells - 1) / cells) * cells;
}

std::vector<complex> periodic_coefficients(const PeriodicModulation& pm, int k_max) {
  return fourier_coeffs_periodic([&](double x) { return pm(x); }, k_max,
                                 periodic_panels(pm.n(), k_max));
}

VerificationReport vanishing_pattern_check(const PeriodicModulation& pm, int k_max, double tol) {
  if (k_max < (1 << pm.n())) throw ContractError("k_max must be at least 2^n");
  const auto c = periodic_coefficients(pm, k_max);
  double top = 0.0;
  for (const auto& z : c) top = std::max(top, std::abs(z));
  if (!(top > tol)) throw ContractError("all coefficients are below tolerance (degenerate base)");

  double forbidden = 0.0, allowed = 0.0;
  int forbidden_at = 0, allowed_at = 0;
  for (int k = -k_max; k <= k_max; ++k) {
    const double v = std::abs(c[static_cast<std::size_t>(k + k_max)]) / top;
    if (is_forbidden_index(pm.j(), pm.n(), k)) {
      if (v > forbidden) forbidden = v, forbidden_at = k;
    } else if (v > allowed) {
      allowed = v, allowed_at = k;
    }
  }
  VerificationReport report;
  report.add("forbidden", forbidden, tol, forbidden_at);
  report.add_at_least("allowed", allowed, tol, allowed_at);
  return report;
}

Signal periodic_signal(const PeriodicModulation& pm, const Grid& x_grid, int k_max) {
  auto space = SampledFunction::sample([&](double x) { return pm(x); }, x_grid);
  const Grid ks(-k_max - 0.5, k_max + 0.5, static_cast<std::size_t>(2 * k_max + 1), 0.5);
  return Signal{std::move(space), SampledFunction(ks, periodic_coefficients(pm, k_max))};
}

std::vector<PeriodicModulation> uzd_periodic(int n) {
  if (n < 2 || n > 8) throw ContractError("periodic UZD size must be in [2, 8]");
  const double p = kTwoPi / static_cast<double>(1 << n);
  std::vector<PeriodicModulation> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const SmoothBump bump(Interval{p * (j + 0.1) / n, p * (j + 0.9) / n});
    auto base = [bump, p](double x) { return complex(bump(x - p * std::floor(x / p))); };
    out.emplace_back(base, j, n);
  }
  return out;
}

}  // namespace pauli
