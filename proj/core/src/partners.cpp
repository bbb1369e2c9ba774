// Numerical search for every step vector sharing moduli and autocorrelation
// with a given b (b_1 = 1, n = 3 or 4).
//
// Unknowns are the phases of the non-zero middle entries of c; c_1 = 1 and
// c_n = b_n are forced by rho_{n-1}. The residual stacks real and imaginary
// parts of rho_k(c) - rho_k(b) for k = 1..n-2.

#include <algorithm>
#include <array>

#include "pauli/steppairs.hpp"

namespace pauli {

namespace {

constexpr int kMaxFree = 2;
constexpr int kMaxResiduals = 4;

double wrap_phase(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

struct Problem {
  std::vector<complex> b;
  std::vector<double> moduli;
  std::vector<int> free;  // indices of middle entries with free phase
  std::vector<complex> target;  // rho_k(b), k = 1..n-2
  double scale = 1.0;

  int unknowns() const { return static_cast<int>(free.size()); }
  int residuals() const { return 2 * static_cast<int>(target.size()); }

  std::vector<complex> build(std::span<const double> phases) const {
    std::vector<complex> c = b;
    for (std::size_t f = 0; f < free.size(); ++f)
      c[static_cast<std::size_t>(free[f])] = std::polar(moduli[static_cast<std::size_t>(free[f])], phases[f]);
    return c;
  }

  std::array<double, kMaxResiduals> residual(const std::vector<complex>& c) const {
    std::array<double, kMaxResiduals> r{};
    const std::size_t n = c.size();
    for (std::size_t k = 1; k + 1 < n; ++k) {
      complex s{};
      for (std::size_t j = 0; j + k < n; ++j) s += c[j + k] * std::conj(c[j]);
      const complex d = s - target[k - 1];
      r[2 * (k - 1)] = d.real();
      r[2 * (k - 1) + 1] = d.imag();
    }
    return r;
  }

  // d rho_k / d gamma_m = i c_m conj(c_{m-k}) - i c_{m+k} conj(c_m)
  std::array<std::array<double, kMaxFree>, kMaxResiduals> jacobian(const std::vector<complex>& c) const {
    std::array<std::array<double, kMaxFree>, kMaxResiduals> jac{};
    const auto n = static_cast<int>(c.size());
    const complex i1{0.0, 1.0};
    for (int k = 1; k + 1 < n; ++k) {
      for (int f = 0; f < unknowns(); ++f) {
        const int m = free[static_cast<std::size_t>(f)];
        complex d{};
        if (m - k >= 0) d += i1 * c[static_cast<std::size_t>(m)] * std::conj(c[static_cast<std::size_t>(m - k)]);
        if (m + k < n) d -= i1 * c[static_cast<std::size_t>(m + k)] * std::conj(c[static_cast<std::size_t>(m)]);
        jac[static_cast<std::size_t>(2 * (k - 1))][static_cast<std::size_t>(f)] = d.real();
        jac[static_cast<std::size_t>(2 * (k - 1) + 1)][static_cast<std::size_t>(f)] = d.imag();
      }
    }
    return jac;
  }

  double max_abs(const std::array<double, kMaxResiduals>& r) const {
    double m = 0.0;
    for (int i = 0; i < residuals(); ++i) m = std::max(m, std::abs(r[static_cast<std::size_t>(i)]));
    return m;
  }

  double sumsq(const std::array<double, kMaxResiduals>& r) const {
    double s = 0.0;
    for (int i = 0; i < residuals(); ++i) s += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
    return s;
  }
};

// Levenberg-Marquardt on the phases. Returns false when the iteration stalls
// above tolerance.
bool refine(const Problem& prob, std::vector<double>& phases, const SolverOptions& opt) {
  const int m = prob.unknowns();
  const double accept = opt.residual_tol * prob.scale;
  auto c = prob.build(phases);
  auto r = prob.residual(c);
  double cost = prob.sumsq(r);
  double lambda = 1e-3;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (prob.max_abs(r) <= 0.01 * accept) break;
    const auto jac = prob.jacobian(c);
    std::array<std::array<double, kMaxFree>, kMaxFree> a{};
    std::array<double, kMaxFree> g{};
    for (int i = 0; i < prob.residuals(); ++i) {
      for (int p = 0; p < m; ++p) {
        g[p] += jac[i][p] * r[i];
        for (int q = 0; q < m; ++q) a[p][q] += jac[i][p] * jac[i][q];
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 12 && !improved; ++attempt) {
      auto h = a;
      for (int p = 0; p < m; ++p) h[p][p] += lambda * (a[p][p] + 1e-12 * prob.scale * prob.scale);
      std::array<double, kMaxFree> step{};
      if (m == 1) {
        step[0] = -g[0] / h[0][0];
      } else {
        const double det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        step[0] = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
        step[1] = -(h[0][0] * g[1] - h[1][0] * g[0]) / det;
      }
      std::vector<double> trial = phases;
      for (int p = 0; p < m; ++p) trial[p] += step[p];
      const auto ct = prob.build(trial);
      const auto rt = prob.residual(ct);
      const double cost_t = prob.sumsq(rt);
      if (std::isfinite(cost_t) && cost_t < cost) {
        phases = trial;
        c = ct;
        r = rt;
        cost = cost_t;
        lambda = std::max(lambda / 4.0, 1e-12);
        improved = true;
      } else {
        lambda *= 8.0;
      }
    }
    if (!improved) break;
  }
  for (auto& p : phases) p = wrap_phase(p);
  return prob.max_abs(r) <= accept;
}

double phase_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(wrap_phase(a[i] - b[i])));
  return d;
}

}  // namespace

std::vector<StepVector> solve_partners(const StepVector& b, const SolverOptions& opt) {
  const std::size_t n = b.size();
  if (n != 3 && n != 4) throw ContractError("solve_partners handles 3- and 4-step vectors");
  if (std::abs(b[0] - 1.0) > 1e-12) throw ContractError("solve_partners requires b_1 = 1");
  if (std::abs(b[n - 1]) < 1e-9) throw ContractError("solve_partners requires |b_n| >= 1e-9");
  if (opt.grid < 4) throw ContractError("solver grid needs at least 4 points per phase");

  Problem prob;
  prob.b = b.entries();
  const auto rho = autocorrelation(b);
  prob.scale = 1.0 + rho[0].real();
  for (std::size_t j = 0; j < n; ++j) prob.moduli.push_back(std::abs(b[j]));
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (prob.moduli[j] > 1e-12 * prob.scale) {
      prob.free.push_back(static_cast<int>(j));
    } else {
      prob.b[j] = 0.0;
    }
  }
  for (std::size_t k = 1; k + 1 < n; ++k) prob.target.push_back(rho[k]);

  const int m = prob.unknowns();
  if (m == 0) return {StepVector(prob.b)};

  const int g = opt.grid;
  const double h = kTwoPi / g;
  auto seed_phase = [&](int i) { return -kPi + (i + 0.5) * h; };

  // Squared residual on the seed grid (periodic in every phase).
  const int rows = (m == 2) ? g : 1;
  std::vector<double> cost(static_cast<std::size_t>(g) * rows);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < rows; ++j) {
      std::vector<double> ph{seed_phase(i)};
      if (m == 2) ph.push_back(seed_phase(j));
      cost[static_cast<std::size_t>(i) * rows + j] = prob.sumsq(prob.residual(prob.build(ph)));
    }
  }
  auto at = [&](int i, int j) {
    i = (i + g) % g;
    j = (m == 2) ? (j + g) % g : 0;
    return cost[static_cast<std::size_t>(i) * rows + j];
  };

  std::vector<std::vector<double>> found;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < rows; ++j) {
      const double v = at(i, j);
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = (m == 2 ? -1 : 0); dj <= (m == 2 ? 1 : 0); ++dj) {
          if ((di || dj) && at(i + di, j + dj) < v) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      std::vector<double> ph{seed_phase(i)};
      if (m == 2) ph.push_back(seed_phase(j));
      if (!refine(prob, ph, opt)) continue;
      const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& f) {
        return phase_distance(f, ph) < opt.dedup_tol;
      });
      if (!dup) found.push_back(ph);
    }
  }
  if (found.empty()) throw InternalError("partner search lost the trivial solution c = b");

  std::sort(found.begin(), found.end());
  std::vector<StepVector> out;
  out.reserve(found.size());
  for (const auto& ph : found) out.emplace_back(prob.build(ph));
  return out;
}

}  // namespace pauli
