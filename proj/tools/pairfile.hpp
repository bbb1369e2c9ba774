#pragma once

// Persistence for pairs and sets: one JSON document per file, complex values
// as "re:im" strings with 17 significant digits.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pauli/numerics.hpp"
#include "pauli/steppairs.hpp"
#include "pauli/verify.hpp"

namespace pauli::cli {

inline constexpr int kSchemaVersion = 1;

/// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed command-line values.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_double(double x);
std::string format_complex(complex z);
/// Accepts "re:im" or a bare real "re". Throws UsageError.
complex parse_complex(std::string_view s);
/// Comma-separated list of parse_complex items.
std::vector<complex> parse_complex_list(std::string_view s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string pair_to_json(const FunctionPair& pair);
FunctionPair pair_from_json(const std::string& text);

enum class SetKind { step, uzd };

struct SetFile {
  SetKind kind = SetKind::step;
  Provenance provenance;
  std::vector<StepVector> steps;
  std::vector<Signal> signals;
};

std::string set_to_json(const SetFile& set);
SetFile set_from_json(const std::string& text);

}  // namespace pauli::cli
