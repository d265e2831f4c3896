#pragma once

#include <stdexcept>
#include <string>

namespace clfbench {

// Invalid arguments, parameters outside their admissible set, malformed
// requests. Mapped to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures and unparsable input files. Mapped to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures: training divergence, solver non-convergence,
// infeasible moment targets. Mapped to CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clfbench
