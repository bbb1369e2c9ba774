#pragma once

#include <string>
#include <vector>

namespace pauli {

/// One named comparison. `passed` is exactly `max_deviation <= tolerance`
/// (a NaN deviation never passes). Lower-bound checks are stated as a
/// shortfall: deviation = threshold - measured, tolerance = 0.
struct Check {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  double worst_point = 0.0;
};

class VerificationReport {
 public:
  const Check& add(std::string name, double max_deviation, double tolerance,
                   double worst_point = 0.0);
  /// Records a lower-bound requirement `measured >= threshold`.
  const Check& add_at_least(std::string name, double measured, double threshold,
                            double worst_point = 0.0);
  void append(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(const std::string& name) const;
  bool overall() const noexcept;
  explicit operator bool() const noexcept { return overall(); }

 private:
  std::vector<Check> checks_;
};

/// JSON-shaped rendering, numbers printed with 17 significant digits.
std::string to_text(const VerificationReport& report);

}  // namespace pauli
