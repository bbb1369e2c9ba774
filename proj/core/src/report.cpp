#include "pauli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pauli {

namespace {

std::string number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const Check& VerificationReport::add(std::string name, double max_deviation, double tolerance,
                                     double worst_point) {
  checks_.push_back(Check{std::move(name), max_deviation <= tolerance, max_deviation, tolerance,
                          worst_point});
  return checks_.back();
}

const Check& VerificationReport::add_at_least(std::string name, double measured, double threshold,
                                              double worst_point) {
  return add(std::move(name), threshold - measured, 0.0, worst_point);
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::overall() const noexcept {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "{\n  \"overall\": " << (report.overall() ? "true" : "false") << ",\n  \"checks\": [";
  const auto& cs = report.checks();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    os << (i ? ",\n" : "\n") << "    {\"name\": " << quoted(c.name)
       << ", \"passed\": " << (c.passed ? "true" : "false")
       << ", \"max_deviation\": " << number(c.max_deviation)
       << ", \"tolerance\": " << number(c.tolerance)
       << ", \"worst_point\": " << number(c.worst_point) << "}";
  }
  os << (cs.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

}  // namespace pauli
