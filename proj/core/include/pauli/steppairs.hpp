#pragma once

// Step-function Pauli pairs. A vector c of length n stands for the step
// function h_c equal to c_j on [j-1, j) and zero outside [0, n).

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/report.hpp"

namespace pauli {

class StepVector {
 public:
  StepVector(std::vector<complex> entries);
  StepVector(std::initializer_list<complex> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  complex operator[](std::size_t j) const noexcept { return entries_[j]; }
  const std::vector<complex>& entries() const noexcept { return entries_; }
  std::span<const complex> span() const noexcept { return entries_; }

  /// Value of h_c at x.
  complex evaluate(double x) const noexcept;

  bool operator==(const StepVector&) const = default;

 private:
  std::vector<complex> entries_;
};

/// rho_k for k = 0..n-1; negative lags follow from Hermitian symmetry.
class AutocorrelationVector {
 public:
  explicit AutocorrelationVector(std::vector<complex> rho) : rho_(std::move(rho)) {}

  std::size_t size() const noexcept { return rho_.size(); }
  const std::vector<complex>& values() const noexcept { return rho_; }
  complex operator[](std::size_t k) const noexcept { return rho_[k]; }
  /// Bilateral access, 1-n <= k <= n-1.
  complex at(int k) const;

 private:
  std::vector<complex> rho_;
};

struct FamilyParamsSol2 {
  double p = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;
};

struct FamilyParamsSol3 {
  double r = 1.0;
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;

  /// r sin(phi) sin(psi) sin(psi - phi) away from zero (1e-12).
  bool valid() const noexcept;
};

struct StepPair {
  StepVector left;
  StepVector right;
};

struct PairClass {
  bool trivial = false;
  bool mp1 = false;
  bool mp2 = false;

  bool neither() const noexcept { return !trivial && !mp1 && !mp2; }
};

AutocorrelationVector autocorrelation(const StepVector& b);

/// sum_{k=1-n}^{n-1} rho_k(b) e^{iky} = |sum_j b_j e^{ijy}|^2.
double step_trig_poly(const StepVector& b, double y);

/// |h_b^(y)|, i.e. |2 sin(y/2)/y| * |sum_j b_j e^{-ijy}|.
double step_fourier_abs(const StepVector& b, double y);

/// h_b^(y) in full, exp(-iy/2) 2 sin(y/2)/y * sum_j b_j e^{-i(j-1)y}.
complex step_fourier(const StepVector& b, double y);

/// The criterion: equal entry moduli and equal autocorrelations at lags 1..n-1.
VerificationReport lemma_stepa_check(const StepVector& b, const StepVector& c, double tol);

StepPair family_sol2(const FamilyParamsSol2& params);
StepPair family_sol3(const FamilyParamsSol3& params);

/// Trivial / MP1 / MP2 flags for a step Pauli pair with b_1 c_1 b_n c_n != 0.
PairClass classify_pair(const StepVector& b, const StepVector& c, double tol);

/// True when 0, alpha - beta and 1/gamma - 1/delta are collinear. Points
/// within tol of the origin count as the origin.
bool collinear_unimodular(complex alpha, complex beta, complex gamma, complex delta,
                          double tol = 1e-9);
/// alpha == beta, or gamma == delta, or alpha*beta*gamma*delta == 1, with the
/// tolerance matched to the geometric predicate.
bool collinear_unimodular_algebraic(complex alpha, complex beta, complex gamma, complex delta,
                                    double tol = 1e-9);

struct SolverOptions {
  int grid = 360;
  double dedup_tol = 1e-7;
  int max_iterations = 60;
  /// Accept a refined point when max residual <= residual_tol * (1 + rho_0(b)).
  double residual_tol = 1e-11;
};

/// All c with c_1 = 1, |c_j| = |b_j| and rho(c) = rho(b), by grid search over
/// the free phases followed by damped Gauss-Newton refinement. Accepts n = 3
/// or n = 4 with b_1 = 1. Output sorted by phases.
std::vector<StepVector> solve_partners(const StepVector& b, const SolverOptions& options = {});

enum class Family { sol1, sol2, sol3 };

struct FamilyMatch {
  Family family;
  /// Parameters recovered for sol2 (p, phi, psi, theta) or sol3 (r, phi, psi, theta).
  std::vector<double> parameters;
  double distance = 0.0;
};

std::string to_string(Family f);

/// Recovers family parameters from (b, c) with b_1 = c_1 = 1, re-emits the
/// family and accepts when every entry agrees within tol.
std::optional<FamilyMatch> match_family(const StepVector& b, const StepVector& c, double tol);

/// Every distinct pair satisfies the criterion and is linearly independent.
VerificationReport is_pauli_set(std::span<const StepVector> vs, double tol);

}  // namespace pauli
