#include "pauli/verify.hpp"

#include <algorithm>

namespace pauli {

namespace {

struct GridMax {
  double value = 0.0;
  double at = 0.0;
};

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid())) throw ContractError("sampled members live on different grids");
}

// max_i ||f_i| - |g_i|| / max(sup|f|, sup|g|)
GridMax relative_modulus_gap(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  const double scale = std::max(f.sup_norm(), g.sup_norm());
  GridMax m;
  if (scale == 0.0) return m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = std::abs(std::abs(f[i]) - std::abs(g[i])) / scale;
    if (d > m.value || std::isnan(d)) m = {d, f.grid()[i]};
  }
  return m;
}

GridMax relative_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  const double scale = f.sup_norm() * g.sup_norm();
  GridMax m;
  if (scale == 0.0) return m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = std::abs(f[i] * g[i]) / scale;
    if (d > m.value || std::isnan(d)) m = {d, f.grid()[i]};
  }
  return m;
}

GridMax step_transform_gap(const StepVector& b, const StepVector& c, const Grid& y_grid) {
  std::vector<double> fb(y_grid.count()), fc(y_grid.count());
  double scale = 0.0;
  for (std::size_t j = 0; j < y_grid.count(); ++j) {
    fb[j] = step_fourier_abs(b, y_grid[j]);
    fc[j] = step_fourier_abs(c, y_grid[j]);
    scale = std::max({scale, fb[j], fc[j]});
  }
  GridMax m;
  if (scale == 0.0) return m;
  for (std::size_t j = 0; j < fb.size(); ++j) {
    const double d = std::abs(fb[j] - fc[j]) / scale;
    if (d > m.value || std::isnan(d)) m = {d, y_grid[j]};
  }
  return m;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "pair " + std::to_string(i) + "-" + std::to_string(j) + ": ";
}

}  // namespace

FunctionPair::FunctionPair(StepVector left, StepVector right, Provenance provenance)
    : kind_(PairKind::step),
      members_(StepPair{std::move(left), std::move(right)}),
      provenance_(std::move(provenance)) {
  const auto& s = std::get<StepPair>(members_);
  if (s.left.size() != s.right.size()) throw ContractError("step pair members differ in length");
}

FunctionPair::FunctionPair(Signal left, Signal right, Provenance provenance)
    : kind_(PairKind::sampled),
      members_(std::pair<Signal, Signal>{std::move(left), std::move(right)}),
      provenance_(std::move(provenance)) {
  const auto& [l, r] = std::get<std::pair<Signal, Signal>>(members_);
  require_same_grid(l.space, r.space);
  if (l.spectrum.has_value() != r.spectrum.has_value())
    throw ContractError("only one sampled member carries a spectrum");
  if (l.spectrum) require_same_grid(*l.spectrum, *r.spectrum);
}

const StepPair& FunctionPair::steps() const {
  if (kind_ != PairKind::step) throw ContractError("pair is not of step kind");
  return std::get<StepPair>(members_);
}

const Signal& FunctionPair::left_signal() const {
  if (kind_ != PairKind::sampled) throw ContractError("pair is not of sampled kind");
  return std::get<std::pair<Signal, Signal>>(members_).first;
}

const Signal& FunctionPair::right_signal() const {
  if (kind_ != PairKind::sampled) throw ContractError("pair is not of sampled kind");
  return std::get<std::pair<Signal, Signal>>(members_).second;
}

FunctionPair FunctionPair::swapped() const {
  if (kind_ == PairKind::step) return FunctionPair(steps().right, steps().left, provenance_);
  return FunctionPair(right_signal(), left_signal(), provenance_);
}

// ---------------------------------------------------------------------------

VerificationReport verify_pair(const FunctionPair& pair, const Grid& y_grid, double tol_space,
                               double tol_freq) {
  VerificationReport report;
  if (pair.kind() == PairKind::step) {
    const auto& [b, c] = pair.steps();
    double dev = 0.0, at = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(std::abs(b[j]) - std::abs(c[j]));
      if (d > dev || std::isnan(d)) dev = d, at = static_cast<double>(j + 1);
    }
    report.add("modulus", dev, tol_space, at);
    const auto gap = step_transform_gap(b, c, y_grid);
    report.add("fourier_modulus", gap.value, tol_freq, gap.at);
    report.add_at_least("independence", independence_ratio(b.span(), c.span()),
                        kIndependenceThreshold);
    return report;
  }

  const auto& f = pair.left_signal();
  const auto& g = pair.right_signal();
  const auto space = relative_modulus_gap(f.space, g.space);
  report.add("modulus", space.value, tol_space, space.at);
  GridMax freq;
  if (f.spectrum && g.spectrum) {
    freq = relative_modulus_gap(*f.spectrum, *g.spectrum);
  } else {
    freq = relative_modulus_gap(fourier_transform(f.space, y_grid), fourier_transform(g.space, y_grid));
  }
  report.add("fourier_modulus", freq.value, tol_freq, freq.at);
  report.add_at_least("independence",
                      independence_ratio(f.space.values(), g.space.values()),
                      kIndependenceThreshold);
  return report;
}

VerificationReport verify_pair(const FunctionPair& pair, const VerifyOptions& options) {
  return verify_pair(pair, options.y_grid, options.tol_space, options.tol_freq);
}

bool linear_independence(const StepVector& f, const StepVector& g) {
  return independence_ratio(f.span(), g.span()) >= kIndependenceThreshold;
}

bool linear_independence(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  return independence_ratio(f.values(), g.values()) >= kIndependenceThreshold;
}

VerificationReport verify_uzd(std::span<const Signal> fs, double tol) {
  if (fs.size() < 2) throw ContractError("a UZD set needs at least two members");
  VerificationReport report;
  for (std::size_t i = 0; i < fs.size(); ++i)
    report.add_at_least("member " + std::to_string(i) + ": nonzero", fs[i].space.sup_norm(), tol);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const auto sp = relative_product(fs[i].space, fs[j].space);
      report.add(pair_name(i, j) + "space product", sp.value, tol, sp.at);
      if (fs[i].spectrum && fs[j].spectrum) {
        const auto fp = relative_product(*fs[i].spectrum, *fs[j].spectrum);
        report.add(pair_name(i, j) + "spectrum product", fp.value, tol, fp.at);
      }
    }
  }
  return report;
}

VerificationReport step_function_level_check(const StepVector& b, const StepVector& c,
                                             const Grid& y_grid, double tol_modulus,
                                             double tol_freq) {
  if (b.size() != c.size()) throw ContractError("step vectors differ in length");
  VerificationReport report;
  double dev = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) dev = std::max(dev, std::abs(std::abs(b[j]) - std::abs(c[j])));
  report.add("modulus", dev, tol_modulus);
  double gap = 0.0, at = 0.0;
  for (std::size_t j = 0; j < y_grid.count(); ++j) {
    const double d = std::abs(step_fourier_abs(b, y_grid[j]) - step_fourier_abs(c, y_grid[j]));
    if (d > gap || std::isnan(d)) gap = d, at = y_grid[j];
  }
  report.add("fourier_modulus", gap, tol_freq, at);
  return report;
}

}  // namespace pauli
