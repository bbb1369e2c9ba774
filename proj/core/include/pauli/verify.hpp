#pragma once

// Uniform verdicts for candidate Pauli pairs and UZD sets.
//
// "Almost everywhere" is read as a maximum over grid points; grids default to
// cell-centred samples, which keeps them off step discontinuities and dyadic
// rationals.

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/report.hpp"
#include "pauli/steppairs.hpp"

namespace pauli {

using ParameterValue = std::variant<double, std::string>;

struct Provenance {
  std::string construction;
  std::map<std::string, ParameterValue> parameters;
};

enum class PairKind { step, sampled };

class FunctionPair {
 public:
  FunctionPair(StepVector left, StepVector right, Provenance provenance = {});
  FunctionPair(Signal left, Signal right, Provenance provenance = {});

  PairKind kind() const noexcept { return kind_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  Provenance& provenance() noexcept { return provenance_; }

  const StepPair& steps() const;
  const Signal& left_signal() const;
  const Signal& right_signal() const;

  FunctionPair swapped() const;

 private:
  PairKind kind_;
  std::variant<StepPair, std::pair<Signal, Signal>> members_;
  Provenance provenance_;
};

struct VerifyOptions {
  Grid y_grid = default_frequency_grid();
  double tol_space = 1e-10;
  double tol_freq = 1e-6;
};

/// Three checks: "modulus" (space side), "fourier_modulus" (relative to the
/// larger transform sup-norm) and "independence".
///
/// Step pairs compare entries exactly and use the closed-form transform
/// modulus. Sampled pairs compare grid values relative to the larger sup-norm;
/// when both members carry spectra those are compared, otherwise both are
/// transformed by quadrature on `y_grid`.
VerificationReport verify_pair(const FunctionPair& pair, const Grid& y_grid, double tol_space,
                               double tol_freq);
VerificationReport verify_pair(const FunctionPair& pair, const VerifyOptions& options = {});

bool linear_independence(const StepVector& f, const StepVector& g);
bool linear_independence(const SampledFunction& f, const SampledFunction& g);

/// Pairwise product checks on the sampled space values and, where present,
/// on the spectra (transform samples or Fourier coefficients), relative to the
/// product of the two sup-norms; plus a non-zero check per member.
VerificationReport verify_uzd(std::span<const Signal> fs, double tol);

/// Criterion-level comparison against the function level: grid maximum of
/// ||h_b^| - |h_c^|| on y_grid (via the closed form) together with the moduli.
VerificationReport step_function_level_check(const StepVector& b, const StepVector& c,
                                             const Grid& y_grid, double tol_modulus,
                                             double tol_freq);

}  // namespace pauli
