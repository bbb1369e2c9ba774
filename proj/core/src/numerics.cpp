#include "pauli/numerics.hpp"

#include <algorithm>
#include <cstdio>

namespace pauli {

namespace {

std::string format_abscissa(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "non-finite integrand at x = %.17g", x);
  return buf;
}

GaussLegendreTable make_gauss_legendre() {
  constexpr int n = kGaussOrder;
  GaussLegendreTable t{};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) break;
    }
    t.nodes[i] = -z;
    t.nodes[n - 1 - i] = z;
    t.weights[i] = t.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return t;
}

}  // namespace

EvaluationError::EvaluationError(double abscissa)
    : std::runtime_error(format_abscissa(abscissa)), abscissa_(abscissa) {}

// ---------------------------------------------------------------------------

Grid::Grid(double lo, double hi, std::size_t count, double offset)
    : lo_(lo), hi_(hi), count_(count), offset_(offset) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw ContractError("grid requires finite lo < hi");
  if (count < 2) throw ContractError("grid requires at least 2 points");
  if (!(offset >= 0.0 && offset < 1.0)) throw ContractError("grid offset must lie in [0, 1)");
}

std::vector<double> Grid::points() const {
  std::vector<double> p(count_);
  for (std::size_t i = 0; i < count_; ++i) p[i] = (*this)[i];
  return p;
}

Grid default_frequency_grid() { return Grid(-50.0, 50.0, 4001, 0.5); }

// ---------------------------------------------------------------------------

SampledFunction::SampledFunction(Grid grid, std::vector<complex> values,
                                 std::optional<Interval> support)
    : grid_(grid), values_(std::move(values)), support_(support) {
  if (values_.size() != grid_.count())
    throw ContractError("sample count does not match grid");
  if (support_) {
    if (!(support_->lo < support_->hi)) throw ContractError("support hint must satisfy lo < hi");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!support_->contains(grid_[i]) && values_[i] != complex{})
        throw ContractError("sample outside the support hint is non-zero");
    }
  }
}

SampledFunction SampledFunction::sample(const ComplexFn& f, const Grid& grid,
                                        std::optional<Interval> support) {
  std::vector<complex> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid[i];
    v[i] = (support && !support->contains(x)) ? complex{} : f(x);
  }
  return SampledFunction(grid, std::move(v), support);
}

complex SampledFunction::operator()(double x) const {
  if (support_ && !support_->contains(x)) return {};
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  const double u = (x - grid_.lo()) / grid_.spacing() - grid_.offset();
  const std::ptrdiff_t order = std::min<std::ptrdiff_t>(4, n);
  auto start = static_cast<std::ptrdiff_t>(std::floor(u)) - (order / 2 - 1);
  start = std::clamp<std::ptrdiff_t>(start, 0, n - order);
  complex acc{};
  for (std::ptrdiff_t a = 0; a < order; ++a) {
    double l = 1.0;
    for (std::ptrdiff_t b = 0; b < order; ++b) {
      if (b != a) l *= (u - static_cast<double>(start + b)) / static_cast<double>(a - b);
    }
    acc += l * values_[static_cast<std::size_t>(start + a)];
  }
  return acc;
}

double SampledFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SampledFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * grid_.spacing());
}

// ---------------------------------------------------------------------------

SmoothBump::SmoothBump(Interval support, double amp) : interval(support), amplitude(amp) {
  if (!(support.lo < support.hi)) throw ContractError("bump interval requires lo < hi");
  if (!(amp > 0.0)) throw ContractError("bump amplitude must be positive");
}

double SmoothBump::operator()(double x) const noexcept {
  if (!(x > interval.lo && x < interval.hi)) return 0.0;
  const double t = (x - interval.lo) / interval.length();
  const double d = t * (1.0 - t);
  if (d <= 0.0) return 0.0;
  return amplitude * std::exp(-1.0 / d);
}

double bump_eval(const SmoothBump& b, double x) { return b(x); }

// ---------------------------------------------------------------------------

const GaussLegendreTable& gauss_legendre() {
  static const GaussLegendreTable table = make_gauss_legendre();
  return table;
}

CompositeRule::CompositeRule(double lo, double hi, int panels) {
  if (!(lo < hi)) throw ContractError("integration requires lo < hi");
  if (panels < 1) throw ContractError("integration requires at least one panel");
  nodes_.reserve(static_cast<std::size_t>(panels) * kGaussOrder);
  weights_.reserve(nodes_.capacity());
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double b = (p + 1 == panels) ? hi : lo + (p + 1) * h;
    add_panel(a, b);
  }
}

CompositeRule::CompositeRule(std::span<const double> breakpoints) {
  if (breakpoints.size() < 2) throw ContractError("composite rule requires two breakpoints");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw ContractError("breakpoints must be strictly increasing");
    add_panel(breakpoints[i], breakpoints[i + 1]);
  }
}

void CompositeRule::add_panel(double a, double b) {
  const auto& gl = gauss_legendre();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < kGaussOrder; ++i) {
    nodes_.push_back(mid + half * gl.nodes[i]);
    weights_.push_back(half * gl.weights[i]);
  }
}

int panels_for(double length, double max_frequency, int min_panels) {
  const double needed = std::ceil(std::abs(length) * std::abs(max_frequency) / 8.0);
  return std::max(min_panels, static_cast<int>(needed));
}

complex quad_integrate(const ComplexFn& f, double lo, double hi, int panels) {
  return integrate(f, lo, hi, panels);
}

std::vector<complex> fourier_sum(const CompositeRule& rule, std::span<const complex> values,
                                 const Grid& y_grid) {
  if (values.size() != rule.size()) throw ContractError("value count does not match rule");
  constexpr std::size_t kReseed = 64;
  const std::size_t m = y_grid.count();
  const double dy = y_grid.spacing();
  std::vector<complex> out(m);
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const complex wv = w[i] * values[i];
    if (wv == complex{}) continue;
    const complex step = std::polar(1.0, -dy * x[i]);
    complex z;
    for (std::size_t j = 0; j < m; ++j) {
      if (j % kReseed == 0) z = wv * std::polar(1.0, -y_grid[j] * x[i]);
      out[j] += z;
      z *= step;
    }
  }
  return out;
}

complex fourier_transform_at(const ComplexFn& f, const Interval& support, double y, int panels) {
  return integrate([&](double x) { return f(x) * std::polar(1.0, -y * x); }, support.lo,
                   support.hi, panels);
}

SampledFunction fourier_transform(const ComplexFn& f, const Interval& support, const Grid& y_grid,
                                  int panels) {
  if (!(std::isfinite(support.lo) && std::isfinite(support.hi) && support.lo < support.hi))
    throw ContractError("transform requires a bounded support");
  if (panels <= 0) {
    const double ymax = std::max(std::abs(y_grid.lo()), std::abs(y_grid.hi()));
    panels = panels_for(support.length(), ymax, 32);
  }
  const CompositeRule rule(support.lo, support.hi, panels);
  std::vector<complex> v(rule.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f(rule.nodes()[i]);
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      throw EvaluationError(rule.nodes()[i]);
  }
  return SampledFunction(y_grid, fourier_sum(rule, v, y_grid));
}

SampledFunction fourier_transform(const SampledFunction& f, const Grid& y_grid) {
  const auto& s = f.support();
  if (!s || !std::isfinite(s->lo) || !std::isfinite(s->hi))
    throw ContractError("transform of sampled data requires a bounded support hint");
  // Panel boundaries sit on sample points so the interpolant is one cubic per panel.
  std::vector<double> breaks{s->lo};
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.count(); ++i) {
    const double x = g[i];
    if (x > breaks.back() && x < s->hi) breaks.push_back(x);
  }
  breaks.push_back(s->hi);
  const CompositeRule rule(breaks);
  std::vector<complex> v(rule.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(rule.nodes()[i]);
  return SampledFunction(y_grid, fourier_sum(rule, v, y_grid));
}

complex fourier_coeff_periodic(const ComplexFn& f, int k, int panels) {
  const double kk = k;
  return integrate([&](double t) { return f(t) * std::polar(1.0, -kk * t); }, 0.0, kTwoPi,
                   panels) /
         kTwoPi;
}

std::vector<complex> fourier_coeffs_periodic(const ComplexFn& f, int k_max, int panels) {
  if (k_max < 1) throw ContractError("k_max must be positive");
  const CompositeRule rule(0.0, kTwoPi, panels);
  std::vector<complex> v(rule.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f(rule.nodes()[i]);
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      throw EvaluationError(rule.nodes()[i]);
  }
  const Grid ks(-k_max - 0.5, k_max + 0.5, static_cast<std::size_t>(2 * k_max + 1), 0.5);
  auto c = fourier_sum(rule, v, ks);
  for (auto& z : c) z /= kTwoPi;
  return c;
}

}  // namespace pauli

namespace pauli {

double independence_ratio(std::span<const complex> f, std::span<const complex> g) {
  if (f.size() != g.size()) throw ContractError("rank test requires equal lengths");
  double nf2 = 0.0, ng2 = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    nf2 += std::norm(f[i]);
    ng2 += std::norm(g[i]);
  }
  if (nf2 == 0.0 || ng2 == 0.0) return 0.0;
  const double nf = std::sqrt(nf2);
  std::vector<complex> r(g.begin(), g.end());
  complex proj{};
  for (int pass = 0; pass < 2; ++pass) {
    complex p{};
    for (std::size_t i = 0; i < f.size(); ++i) p += std::conj(f[i] / nf) * r[i];
    for (std::size_t i = 0; i < f.size(); ++i) r[i] -= p * (f[i] / nf);
    proj += p;
  }
  double nr2 = 0.0;
  for (const auto& z : r) nr2 += std::norm(z);
  const double nr = std::sqrt(nr2);
  // R = [[nf, proj], [0, nr]]; sigma_max^2 is the top eigenvalue of R^H R.
  const double tr = nf2 + std::norm(proj) + nr2;
  const double det = nf2 * nr2;
  const double lmax = 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
  return nf * nr / lmax;
}

}  // namespace pauli
