#include "pauli/constructions.hpp"

#include <algorithm>
#include <cstdio>

namespace pauli {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kCoeffTailTol = 1e-9;
constexpr double kInterleaveTailRatio = 1e-18;
constexpr int kMaxCutoff = 16384;

std::string format_x(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_finite(complex v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw EvaluationError(x);
}

void require_unimodular_phase(const ComplexFn& phase) {
  if (!phase) throw ContractError("phase function is empty");
  for (int i = 0; i < 97; ++i) {
    const double t = kTwoPi * (i + 0.37) / 97.0;
    const complex v = phase(t);
    require_finite(v, t);
    if (std::abs(std::abs(v) - 1.0) > kUnimodularTol)
      throw ContractError("phase is not unimodular at x = " + format_x(t));
  }
}

void require_short_window(const SmoothBump& w) {
  if (w.interval.length() > 1.0 + 1e-12)
    throw ContractError("Ismagilov window must have support length at most 1");
}

// c_k for |k| <= 2K, index k + 2K.
std::vector<complex> phase_coefficients(const ComplexFn& phase, int cutoff) {
  if (cutoff < 1) throw ContractError("coefficient cutoff must be positive");
  return fourier_coeffs_periodic(phase, 2 * cutoff, panels_for(kTwoPi, 4.0 * cutoff, 64));
}

double tail_sum(const std::vector<complex>& c2k, int cutoff) {
  double t = 0.0;
  for (int k = cutoff + 1; k <= 2 * cutoff; ++k)
    t += std::abs(c2k[static_cast<std::size_t>(2 * cutoff + k)]) +
         std::abs(c2k[static_cast<std::size_t>(2 * cutoff - k)]);
  return t;
}

std::vector<complex> central(const std::vector<complex>& c2k, int cutoff) {
  return {c2k.begin() + cutoff, c2k.begin() + 3 * cutoff + 1};
}

// 2pi sum_k |c_k| |g(k - y)|; the window is short enough that at most one term
// is non-zero.
double closed_form(const std::vector<complex>& c, int cutoff, const SmoothBump& g, double y) {
  const double lo = std::ceil(y + g.interval.lo);
  const double hi = std::floor(y + g.interval.hi);
  double sum = 0.0;
  int nonzero = 0;
  for (double kd = std::max(lo, -double(cutoff)); kd <= std::min(hi, double(cutoff)); kd += 1.0) {
    const double gv = g(kd - y);
    if (gv == 0.0) continue;
    ++nonzero;
    sum += std::abs(c[static_cast<std::size_t>(kd + cutoff)]) * gv;
  }
  if (nonzero > 1) throw InternalError("Ismagilov closed form met two overlapping window shifts");
  return kTwoPi * sum;
}

complex window_hat(const SmoothBump& g, double x) {
  return fourier_transform_at([&](double t) { return complex(g(t)); }, g.interval, x,
                              panels_for(g.interval.length(), std::abs(x), 64));
}

std::vector<complex> combine(std::span<const SampledFunction> fs, std::span<const complex> coef) {
  std::vector<complex> out(fs.front().size());
  for (std::size_t n = 0; n < fs.size(); ++n) {
    if (!(fs[n].grid() == fs.front().grid()))
      throw ContractError("combined functions live on different grids");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coef[n] * fs[n][i];
  }
  return out;
}

std::optional<Interval> hull(std::span<const SampledFunction> fs) {
  std::optional<Interval> s;
  for (const auto& f : fs) {
    if (!f.support()) return std::nullopt;
    if (!s) s = *f.support();
    else s = Interval{std::min(s->lo, f.support()->lo), std::max(s->hi, f.support()->hi)};
  }
  return s;
}

SampledFunction linear_combination(std::span<const SampledFunction> fs, std::span<const complex> coef) {
  return SampledFunction(fs.front().grid(), combine(fs, coef), hull(fs));
}

Signal linear_combination(std::span<const Signal> fs, std::span<const complex> coef) {
  std::vector<SampledFunction> space, spec;
  for (const auto& f : fs) {
    space.push_back(f.space);
    if (f.spectrum) spec.push_back(*f.spectrum);
  }
  if (!spec.empty() && spec.size() != fs.size())
    throw ContractError("only some combined signals carry spectra");
  Signal out{linear_combination(space, coef), std::nullopt};
  if (!spec.empty()) out.spectrum = linear_combination(spec, coef);
  return out;
}

std::vector<complex> combination_weights(std::size_t count, std::span<const double> c,
                                         std::span<const complex> w) {
  if (count == 0) throw ContractError("combination needs at least one function");
  if (c.size() != count || w.size() != count)
    throw ContractError("combination weights do not match the function count");
  std::vector<complex> coef(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (!(c[n] > 0.0) || !std::isfinite(c[n]))
      throw ContractError("combination coefficients must be positive");
    if (std::abs(std::abs(w[n]) - 1.0) > kUnimodularTol)
      throw ContractError("combination phases must be unimodular");
    coef[n] = c[n] * w[n];
  }
  return coef;
}

}  // namespace

// ---------------------------------------------------------------------------

FunctionPair mp_pair(const MPParams& params, const Grid& grid) {
  if (!params.rho || !params.phi) throw ContractError("MP pair needs rho and phi");
  double worst = 0.0, worst_x = 0.0;
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double x = grid[i];
    const double d = std::abs(params.rho(x) - params.rho(params.a - x));
    if (d > worst || std::isnan(d)) worst = d, worst_x = x;
  }
  if (!(worst <= 1e-10))
    throw ContractError("rho is not symmetric about a/2; worst x = " + format_x(worst_x));

  std::vector<complex> f1(grid.count()), f2(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double x = grid[i];
    if (!params.support.contains(x)) continue;
    const double r = params.rho(x);
    f1[i] = r * std::polar(1.0, params.phi(x));
    f2[i] = r * std::polar(1.0, -params.phi(params.a - x));
    require_finite(f1[i], x);
    require_finite(f2[i], x);
  }
  Provenance prov{"mp", {{"a", params.a}}};
  return FunctionPair(Signal{SampledFunction(grid, std::move(f1), params.support), std::nullopt},
                      Signal{SampledFunction(grid, std::move(f2), params.support), std::nullopt},
                      std::move(prov));
}

// ---------------------------------------------------------------------------

complex ismagilov_f(const IsmagilovParams& params, double x) {
  require_short_window(params.window);
  return window_hat(params.window, x) * params.phase(x - params.shift);
}

double ismagilov_fourier_abs_closed(const IsmagilovParams& params, double y) {
  require_short_window(params.window);
  require_unimodular_phase(params.phase);
  const auto c2k = phase_coefficients(params.phase, params.coeff_cutoff);
  if (!(tail_sum(c2k, params.coeff_cutoff) < kCoeffTailTol))
    throw CutoffError("phase coefficients beyond the cutoff are not negligible");
  return closed_form(central(c2k, params.coeff_cutoff), params.coeff_cutoff, params.window, y);
}

IsmagilovFamily::IsmagilovFamily(ComplexFn phase, SmoothBump window, int coeff_cutoff,
                                 double x_extent, double max_frequency)
    : phase_(std::move(phase)),
      window_(window),
      cutoff_(coeff_cutoff),
      x_extent_(x_extent),
      max_frequency_(max_frequency),
      window_rule_(window_.interval.lo, window_.interval.hi,
                   panels_for(window_.interval.length(), x_extent, 64)),
      mesh_(-1.0, 1.0, 1) {
  require_short_window(window_);
  require_unimodular_phase(phase_);
  if (!(x_extent > 0.0) || !(max_frequency > 0.0))
    throw ContractError("mesh extent and frequency must be positive");
  const auto c2k = phase_coefficients(phase_, cutoff_);
  tail_ = tail_sum(c2k, cutoff_);
  if (!(tail_ < kCoeffTailTol))
    throw CutoffError("phase coefficients beyond the cutoff are not negligible");
  coeffs_ = central(c2k, cutoff_);

  // Bandwidth of g^(x) phase(x - a) e^{-ixy}.
  double cmax = 0.0;
  for (const auto& c : coeffs_) cmax = std::max(cmax, std::abs(c));
  int k_eff = 0;
  for (int k = 0; k <= cutoff_; ++k) {
    if (std::abs(coeffs_[static_cast<std::size_t>(cutoff_ + k)]) > 1e-16 * cmax ||
        std::abs(coeffs_[static_cast<std::size_t>(cutoff_ - k)]) > 1e-16 * cmax)
      k_eff = k;
  }
  const double window_freq = std::max(std::abs(window_.interval.lo), std::abs(window_.interval.hi));
  const int panels = panels_for(2.0 * x_extent_, max_frequency_ + window_freq + k_eff + 1.0, 64);
  mesh_ = CompositeRule(-x_extent_, x_extent_, panels);

  // Node q of every panel sits on a uniform grid with offset (1 + t_q)/2, so
  // g^ on the mesh is sixteen uniform-grid transforms.
  std::vector<complex> gv(window_rule_.size());
  for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = window_(window_rule_.nodes()[i]);
  window_hat_on_mesh_.assign(mesh_.size(), complex{});
  const auto& gl = gauss_legendre();
  for (int q = 0; q < kGaussOrder; ++q) {
    const Grid col(-x_extent_, x_extent_, static_cast<std::size_t>(panels), 0.5 * (1.0 + gl.nodes[q]));
    const auto vals = fourier_sum(window_rule_, gv, col);
    for (int p = 0; p < panels; ++p)
      window_hat_on_mesh_[static_cast<std::size_t>(p * kGaussOrder + q)] = vals[static_cast<std::size_t>(p)];
  }
}

complex IsmagilovFamily::window_transform(double x) const { return window_hat(window_, x); }

complex IsmagilovFamily::f(double shift, double x) const {
  return window_transform(x) * phase_(x - shift);
}

double IsmagilovFamily::fourier_abs_closed(double y) const {
  return closed_form(coeffs_, cutoff_, window_, y);
}

SampledFunction IsmagilovFamily::fourier_quadrature(double shift, const Grid& y_grid) const {
  const double ymax = std::max(std::abs(y_grid.lo()), std::abs(y_grid.hi()));
  if (ymax > max_frequency_)
    throw ContractError("frequency grid exceeds the mesh resolution");
  std::vector<complex> v(mesh_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = mesh_.nodes()[i];
    v[i] = window_hat_on_mesh_[i] * phase_(x - shift);
    require_finite(v[i], x);
  }
  return SampledFunction(y_grid, fourier_sum(mesh_, v, y_grid));
}

SampledFunction IsmagilovFamily::sample(double shift, const Grid& x_grid) const {
  std::vector<complex> gv(window_rule_.size());
  for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = window_(window_rule_.nodes()[i]);
  auto v = fourier_sum(window_rule_, gv, x_grid);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= phase_(x_grid[i] - shift);
  return SampledFunction(x_grid, std::move(v));
}

// ---------------------------------------------------------------------------

InterleaveSpec::InterleaveSpec(ComplexFn a, Interval a_support, ComplexFn b, Interval b_support,
                               int k_cutoff)
    : a_(std::move(a)),
      b_(std::move(b)),
      a_support_(a_support),
      b_support_(b_support),
      cutoff_(k_cutoff) {
  if (!a_ || !b_) throw ContractError("interleaving needs both a and b");
  if (k_cutoff < 1) throw ContractError("interleaving cutoff must be positive");
  if (!(a_support_.lo < a_support_.hi) || a_support_.lo < -1e-12 || a_support_.hi > kTwoPi + 1e-12)
    throw ContractError("support of a must lie in [0, 2pi]");
  if (!(b_support_.lo < b_support_.hi) || b_support_.lo < -1e-12 || b_support_.hi > 1.0 + 1e-12)
    throw ContractError("support of b must lie in [0, 1]");
  for (int i = 0; i < 256; ++i) {
    const double ta = kTwoPi * (i + 0.5) / 256.0;
    if (!a_support_.contains(ta) && a_(ta) != complex{})
      throw ContractError("a is non-zero outside its stated support at x = " + format_x(ta));
    const double tb = (i + 0.5) / 256.0;
    if (!b_support_.contains(tb) && b_(tb) != complex{})
      throw ContractError("b is non-zero outside its stated support at x = " + format_x(tb));
  }
  compute_coefficients();
}

InterleaveSpec::InterleaveSpec(const SmoothBump& a, const SmoothBump& b, int k_cutoff)
    : InterleaveSpec([a](double x) { return complex(a(x)); }, a.interval,
                     [b](double x) { return complex(b(x)); }, b.interval, k_cutoff) {}

InterleaveSpec InterleaveSpec::with_auto_cutoff(const SmoothBump& a, const SmoothBump& b,
                                                int k_start) {
  for (int k = std::max(1, k_start);; k *= 2) {
    try {
      return InterleaveSpec(a, b, k);
    } catch (const CutoffError&) {
      if (k >= kMaxCutoff) throw;
    }
  }
}

void InterleaveSpec::compute_coefficients() {
  const int k2 = 2 * cutoff_;
  const CompositeRule rule(a_support_.lo, a_support_.hi,
                           panels_for(a_support_.length(), 2.0 * k2, 64));
  std::vector<complex> v(rule.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a_(rule.nodes()[i]);
    require_finite(v[i], rule.nodes()[i]);
  }
  const Grid ks(-k2 - 0.5, k2 + 0.5, static_cast<std::size_t>(2 * k2 + 1), 0.5);
  const auto all = fourier_sum(rule, v, ks);
  double kept = 0.0, tail = 0.0;
  for (int k = -k2; k <= k2; ++k) {
    const double m2 = std::norm(all[static_cast<std::size_t>(k + k2)]);
    (std::abs(k) <= cutoff_ ? kept : tail) += m2;
  }
  if (!(tail <= kInterleaveTailRatio * kept))
    throw CutoffError("coefficients of a beyond the cutoff are not negligible");
  a_hat_.assign(all.begin() + cutoff_, all.begin() + 3 * cutoff_ + 1);
}

complex InterleaveSpec::a(double x) const { return a_support_.contains(x) ? a_(x) : complex{}; }
complex InterleaveSpec::b(double x) const { return b_support_.contains(x) ? b_(x) : complex{}; }

complex InterleaveSpec::a_hat(int k) const {
  if (std::abs(k) > cutoff_) throw ContractError("coefficient index beyond the cutoff");
  return a_hat_[static_cast<std::size_t>(k + cutoff_)];
}

complex InterleaveSpec::a_per(double y) const {
  const double t = y - kTwoPi * std::floor(y / kTwoPi);
  // a(2pi) folds onto t = 0
  return t == 0.0 ? a(0.0) + a(kTwoPi) : a(t);
}

complex InterleaveSpec::b_hat(double y) const {
  return fourier_transform_at(b_, b_support_, y, panels_for(b_support_.length(), std::abs(y), 32));
}

Interval InterleaveSpec::support() const noexcept {
  return Interval{static_cast<double>(-cutoff_), static_cast<double>(cutoff_ + 1)};
}

double InterleaveSpec::a_norm() const {
  return std::sqrt(integrate([&](double x) { return complex(std::norm(a_(x))); }, a_support_.lo,
                             a_support_.hi, 64)
                       .real());
}

double InterleaveSpec::b_norm() const {
  return std::sqrt(integrate([&](double x) { return complex(std::norm(b_(x))); }, b_support_.lo,
                             b_support_.hi, 64)
                       .real());
}

complex f_ab(const InterleaveSpec& spec, double x) {
  const auto& bs = spec.b_support();
  const int k = spec.cutoff();
  const double lo = std::max(std::ceil(bs.lo - x), double(-k));
  const double hi = std::min(std::floor(bs.hi - x), double(k));
  complex s{};
  for (double kd = lo; kd <= hi; kd += 1.0) s += spec.a_hat(static_cast<int>(kd)) * spec.b(x + kd);
  return s;
}

complex f_ab_fourier(const InterleaveSpec& spec, double y) {
  return kTwoPi * spec.b_hat(y) * spec.a_per(y);
}

namespace {

CompositeRule interleave_rule(const InterleaveSpec& spec, double max_frequency) {
  const auto& bs = spec.b_support();
  const int per_cell = panels_for(bs.length(), max_frequency, 4);
  const double h = bs.length() / per_cell;
  std::vector<double> breaks;
  for (int k = spec.cutoff(); k >= -spec.cutoff(); --k) {
    const double lo = bs.lo - k;
    if (!breaks.empty() && lo <= breaks.back()) breaks.pop_back();
    for (int p = 0; p < per_cell; ++p) breaks.push_back(lo + p * h);
    breaks.push_back(bs.hi - k);
  }
  return CompositeRule(breaks);
}

}  // namespace

complex f_ab_fourier_quadrature(const InterleaveSpec& spec, double y) {
  return integrate([&](double x) { return f_ab(spec, x) * std::polar(1.0, -y * x); },
                   interleave_rule(spec, std::abs(y)));
}

double f_ab_norm_quadrature(const InterleaveSpec& spec) {
  return std::sqrt(
      integrate([&](double x) { return complex(std::norm(f_ab(spec, x))); }, interleave_rule(spec, 0.0))
          .real());
}

std::vector<InterleaveSpec> uzd_line(int m) {
  if (m < 2 || m > 64) throw ContractError("UZD line size must be in [2, 64]");
  std::vector<InterleaveSpec> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    const Interval ib{(n + 0.1) / m, (n + 0.9) / m};
    const Interval ia{kTwoPi * ib.lo, kTwoPi * ib.hi};
    out.push_back(InterleaveSpec::with_auto_cutoff(SmoothBump(ia), SmoothBump(ib)));
  }
  return out;
}

Grid interleave_grid(int cutoff, int per_unit) {
  if (cutoff < 1 || per_unit < 1) throw ContractError("grid needs a positive cutoff and density");
  return Grid(-cutoff - 1.0, cutoff + 2.0, static_cast<std::size_t>(2 * cutoff + 3) * per_unit);
}

Signal interleave_signal(const InterleaveSpec& spec, const Grid& x_grid, const Grid& y_grid) {
  std::vector<complex> v(x_grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_ab(spec, x_grid[i]);
  auto bh = fourier_transform([&](double x) { return spec.b(x); }, spec.b_support(), y_grid);
  std::vector<complex> s(y_grid.count());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = kTwoPi * bh[j] * spec.a_per(y_grid[j]);
  return Signal{SampledFunction(x_grid, std::move(v), spec.support()),
                SampledFunction(y_grid, std::move(s))};
}

Signal normalized(const Signal& s) {
  const double n = s.space.l2_norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ContractError("cannot normalise a zero signal");
  const complex inv = 1.0 / n;
  Signal out{linear_combination(std::span(&s.space, 1), std::span(&inv, 1)), std::nullopt};
  if (s.spectrum) out.spectrum = linear_combination(std::span(&*s.spectrum, 1), std::span(&inv, 1));
  return out;
}

SampledFunction pauli_combine(std::span<const SampledFunction> fs, std::span<const double> c,
                              std::span<const complex> w) {
  const auto coef = combination_weights(fs.size(), c, w);
  return linear_combination(fs, coef);
}

Signal pauli_combine(std::span<const Signal> fs, std::span<const double> c,
                     std::span<const complex> w) {
  const auto coef = combination_weights(fs.size(), c, w);
  return linear_combination(fs, coef);
}

FunctionPair pauli_state_pair(std::span<const Signal> fs, std::span<const complex> coeffs) {
  if (coeffs.empty() || fs.size() != 2 * coeffs.size())
    throw ContractError("need 2m UZD members for m coefficients");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](complex z) { return z == complex{}; }))
    throw ContractError("coefficients are all zero");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const double n = fs[i].space.l2_norm();
    if (std::abs(n - 1.0) > 1e-6)
      throw ContractError("member " + std::to_string(i) + " is not unit-norm (" + format_x(n) + ")");
  }
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<complex> cf(fs.size()), cg(fs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    cf[2 * n] = coeffs[n] * r;
    cf[2 * n + 1] = coeffs[n] * r;
    cg[2 * n] = coeffs[n] * r;
    cg[2 * n + 1] = -coeffs[n] * r;
  }
  Provenance prov{"pauli_state", {{"m", static_cast<double>(coeffs.size())}}};
  return FunctionPair(linear_combination(fs, cf), linear_combination(fs, cg), std::move(prov));
}

}  // namespace pauli
