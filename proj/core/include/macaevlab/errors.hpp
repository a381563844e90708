#pragma once
//
// Error taxonomy shared across the library. The CLI maps these onto
// process exit codes, so new error kinds should extend one of the
// existing bases rather than raw std::exception.
//

#include <stdexcept>
#include <string>

namespace macaev {

// Malformed caller input: bad spec strings, negative values, mismatched
// domains. CLI exit code 64.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configurable resource limit was hit (ball size, schedule search cap).
// CLI exit code 3.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency guarantee failed (inverted sandwich, certificate
// that does not satisfy its divergence identity). Always a bug or corrupted
// data, never a user mistake. CLI exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace macaev
