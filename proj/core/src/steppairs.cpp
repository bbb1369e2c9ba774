#include "pauli/steppairs.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace pauli {

namespace {

void require_same_length(const StepVector& b, const StepVector& c) {
  if (b.size() != c.size()) throw ContractError("step vectors differ in length");
}

complex expi(double a) { return std::polar(1.0, a); }

void require_unimodular(complex z, const char* name) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12)
    throw ContractError(std::string("collinearity test: ") + name + " is not unimodular");
}

// max_j |x_j - y_j| / max(1, |y_j|)
double entry_distance(const StepVector& x, const StepVector& y) {
  double d = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    d = std::max(d, std::abs(x[j] - y[j]) / std::max(1.0, std::abs(y[j])));
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------

StepVector::StepVector(std::vector<complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ContractError("step vector needs at least one entry");
}

StepVector::StepVector(std::initializer_list<complex> entries)
    : StepVector(std::vector<complex>(entries)) {}

complex StepVector::evaluate(double x) const noexcept {
  if (!(x >= 0.0) || x >= static_cast<double>(entries_.size())) return {};
  return entries_[static_cast<std::size_t>(std::floor(x))];
}

complex AutocorrelationVector::at(int k) const {
  const int n = static_cast<int>(rho_.size());
  if (k <= -n || k >= n) throw ContractError("autocorrelation lag out of range");
  return k >= 0 ? rho_[static_cast<std::size_t>(k)] : std::conj(rho_[static_cast<std::size_t>(-k)]);
}

AutocorrelationVector autocorrelation(const StepVector& b) {
  const std::size_t n = b.size();
  std::vector<complex> rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    complex s{};
    for (std::size_t j = 0; j + k < n; ++j) s += b[k + j] * std::conj(b[j]);
    rho[k] = s;
  }
  return AutocorrelationVector(std::move(rho));
}

double step_trig_poly(const StepVector& b, double y) {
  const auto rho = autocorrelation(b);
  const int n = static_cast<int>(b.size());
  complex s{};
  for (int k = 1 - n; k <= n - 1; ++k) s += rho.at(k) * expi(k * y);
  double mass = 0.0;
  for (int k = 1 - n; k <= n - 1; ++k) mass += std::abs(rho.at(k));
  if (std::abs(s.imag()) > 1e-12 * mass) throw InternalError("autocorrelation sum is not real");
  return s.real();
}

double step_fourier_abs(const StepVector& b, double y) {
  const double chi = (y == 0.0) ? 1.0 : std::abs(2.0 * std::sin(0.5 * y) / y);
  return chi * std::sqrt(std::max(0.0, step_trig_poly(b, -y)));
}

complex step_fourier(const StepVector& b, double y) {
  const complex chi = (y == 0.0) ? complex{1.0} : expi(-0.5 * y) * (2.0 * std::sin(0.5 * y) / y);
  complex s{};
  for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * expi(-static_cast<double>(j) * y);
  return chi * s;
}

VerificationReport lemma_stepa_check(const StepVector& b, const StepVector& c, double tol) {
  require_same_length(b, c);
  const std::size_t n = b.size();

  double mod_dev = 0.0, mod_at = 0.0, mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = std::abs(std::abs(b[j]) - std::abs(c[j]));
    if (d > mod_dev || std::isnan(d)) mod_dev = d, mod_at = static_cast<double>(j + 1);
    mass += std::abs(b[j]) + std::abs(c[j]);
  }

  const auto rb = autocorrelation(b);
  const auto rc = autocorrelation(c);
  double rho_dev = 0.0, rho_at = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double d = std::abs(rb[k] - rc[k]);
    if (d > rho_dev || std::isnan(d)) rho_dev = d, rho_at = static_cast<double>(k);
  }

  VerificationReport report;
  report.add("modulus", mod_dev, tol, mod_at);
  report.add("autocorrelation", rho_dev, tol, rho_at);
  // rho_0 agreement follows from the moduli; its bound is implied by the modulus check.
  const double r0b = rb[0].real(), r0c = rc[0].real();
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * (r0b + r0c);
  report.add("parseval_rho0", std::abs(r0b - r0c), tol * mass + slack, 0.0);
  return report;
}

// ---------------------------------------------------------------------------

bool FamilyParamsSol3::valid() const noexcept {
  return std::abs(r * std::sin(phi) * std::sin(psi) * std::sin(psi - phi)) > 1e-12;
}

StepPair family_sol2(const FamilyParamsSol2& q) {
  const auto [p, phi, psi, theta] = q;
  StepVector b{1.0, p * expi(phi), p * expi(psi), expi(theta)};
  // c_2 and c_3 carry the opposite angles: c_2 pairs with psi, c_3 with phi
  StepVector c{1.0, p * expi(theta - psi), p * expi(theta - phi), expi(theta)};
  return {std::move(b), std::move(c)};
}

StepPair family_sol3(const FamilyParamsSol3& q) {
  if (!q.valid())
    throw ContractError("sol3 parameters violate r sin(phi) sin(psi) sin(psi - phi) != 0");
  const auto [r, phi, psi, theta] = q;
  const double s = std::sin(psi - phi);
  const double p = (r * r - 1.0) * std::sin(psi) / (r * s);
  const double qq = (r * r - 1.0) * std::sin(phi) / s;
  const complex last = r * expi(3.0 * theta);
  StepVector b{1.0, p * expi(theta + phi), qq * expi(2.0 * theta + psi), last};
  StepVector c{1.0, p * expi(theta - phi), qq * expi(2.0 * theta - psi), last};
  return {std::move(b), std::move(c)};
}

PairClass classify_pair(const StepVector& b, const StepVector& c, double tol) {
  require_same_length(b, c);
  const std::size_t n = b.size();
  const std::array<std::pair<const char*, complex>, 4> ends{
      {{"b_1", b[0]}, {"c_1", c[0]}, {"b_n", b[n - 1]}, {"c_n", c[n - 1]}}};
  for (const auto& [name, z] : ends) {
    if (std::abs(z) <= tol) throw ContractError(std::string("classification requires ") + name + " != 0");
  }
  if (!lemma_stepa_check(b, c, tol).overall())
    throw ContractError("classification requires a pair satisfying the step criterion");

  PairClass out;
  double mod_dev = 0.0;
  for (std::size_t j = 0; j < n; ++j) mod_dev = std::max(mod_dev, std::abs(std::abs(b[j]) - std::abs(c[j])));
  out.trivial = mod_dev <= tol && independence_ratio(b.span(), c.span()) < kIndependenceThreshold;

  double pal = 0.0;
  for (std::size_t j = 0; j < n; ++j) pal = std::max(pal, std::abs(std::abs(b[j]) - std::abs(b[n - 1 - j])));
  out.mp1 = pal <= tol;

  complex w = c[0] / std::conj(b[0]);
  w /= std::abs(w);
  double conj_dev = 0.0;
  for (std::size_t j = 0; j < n; ++j) conj_dev = std::max(conj_dev, std::abs(c[j] - w * std::conj(b[j])));
  out.mp2 = conj_dev <= tol;
  return out;
}

// ---------------------------------------------------------------------------

bool collinear_unimodular(complex alpha, complex beta, complex gamma, complex delta, double tol) {
  require_unimodular(alpha, "alpha");
  require_unimodular(beta, "beta");
  require_unimodular(gamma, "gamma");
  require_unimodular(delta, "delta");
  const complex u = alpha - beta;
  const complex v = 1.0 / gamma - 1.0 / delta;
  const double nu = std::abs(u), nv = std::abs(v);
  if (nu <= tol || nv <= tol) return true;
  return std::abs((u * std::conj(v)).imag()) <= tol * nu * nv;
}

bool collinear_unimodular_algebraic(complex alpha, complex beta, complex gamma, complex delta,
                                    double tol) {
  require_unimodular(alpha, "alpha");
  require_unimodular(beta, "beta");
  require_unimodular(gamma, "gamma");
  require_unimodular(delta, "delta");
  // |Im(u conj v)| / (|u||v|) = |sin(arg(alpha beta gamma delta)/2)| = |alpha beta gamma delta - 1| / 2
  return std::abs(alpha - beta) <= tol || std::abs(gamma - delta) <= tol ||
         std::abs(alpha * beta * gamma * delta - 1.0) <= 2.0 * tol;
}

// ---------------------------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::sol1: return "sol1";
    case Family::sol2: return "sol2";
    case Family::sol3: return "sol3";
  }
  return "unknown";
}

std::optional<FamilyMatch> match_family(const StepVector& b, const StepVector& c, double tol) {
  require_same_length(b, c);
  if (std::abs(b[0] - 1.0) > tol || std::abs(c[0] - 1.0) > tol) return std::nullopt;

  if (entry_distance(c, b) <= tol) return FamilyMatch{Family::sol1, {}, entry_distance(c, b)};
  if (b.size() != 4) return std::nullopt;

  // sol2: |b_4| = 1, |b_2| = |b_3| = p >= 0.
  if (std::abs(std::abs(b[3]) - 1.0) <= tol) {
    const FamilyParamsSol2 q{std::abs(b[1]), std::arg(b[1]), std::arg(b[2]), std::arg(b[3])};
    const auto [eb, ec] = family_sol2(q);
    const double d = std::max(entry_distance(eb, b), entry_distance(ec, c));
    if (d <= tol) return FamilyMatch{Family::sol2, {q.p, q.phi, q.psi, q.theta}, d};
  }

  // sol3: b_4 = r e^{3i theta} with either sign of r, e^{2i phi} = b_2 conj(c_2) / |.|,
  // e^{2i psi} = b_3 conj(c_3) / |.|.
  const double phi0 = 0.5 * std::arg(b[1] * std::conj(c[1]));
  const double psi0 = 0.5 * std::arg(b[2] * std::conj(c[2]));
  std::optional<FamilyMatch> best;
  for (int sign : {1, -1}) {
    const double r = sign * std::abs(b[3]);
    const double base = std::arg(b[3]) + (sign < 0 ? kPi : 0.0);
    for (int m = 0; m < 3; ++m) {
      const double theta = (base + kTwoPi * m) / 3.0;
      for (double phi : {phi0, phi0 + kPi}) {
        for (double psi : {psi0, psi0 + kPi}) {
          const FamilyParamsSol3 q{r, phi, psi, theta};
          if (!q.valid()) continue;
          const auto [eb, ec] = family_sol3(q);
          const double d = std::max(entry_distance(eb, b), entry_distance(ec, c));
          if (d <= tol && (!best || d < best->distance))
            best = FamilyMatch{Family::sol3, {r, phi, psi, theta}, d};
        }
      }
    }
  }
  return best;
}

VerificationReport is_pauli_set(std::span<const StepVector> vs, double tol) {
  if (vs.size() < 2) throw ContractError("a Pauli set needs at least two members");
  for (const auto& v : vs) require_same_length(vs[0], v);
  VerificationReport report;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const std::string prefix = "pair " + std::to_string(i) + "-" + std::to_string(j) + ": ";
      report.append(lemma_stepa_check(vs[i], vs[j], tol), prefix);
      report.add_at_least(prefix + "independence", independence_ratio(vs[i].span(), vs[j].span()),
                          kIndependenceThreshold);
    }
  }
  return report;
}

}  // namespace pauli
