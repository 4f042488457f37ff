#pragma once

#include <stdexcept>
#include <string>

namespace unruhlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSubsystem : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NonHermitian : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct BadStrength : Error { using Error::Error; };
struct BadArity : Error { using Error::Error; };
struct BadPhysicalParam : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };

// Post-selection removed (numerically) all of the state's weight.
struct DegenerateOutcome : Error { using Error::Error; };

struct ConfigError : Error {
  ConfigError(int line, std::string field, const std::string& message)
      : Error(format(line, field, message)), line(line), field(std::move(field)) {}

  int line;  // 0 when the problem is not tied to a line
  std::string field;

 private:
  static std::string format(int line, const std::string& field, const std::string& message) {
    std::string out = "config";
    if (line > 0) out += ":" + std::to_string(line);
    if (!field.empty()) out += ": " + field;
    return out + ": " + message;
  }
};

}  // namespace unruhlab
