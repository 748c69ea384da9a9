#ifndef SQJUMP_ERRORS_HPP
#define SQJUMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqjump {

/// The normal-ordered exponential product does not exist at this point:
/// a factorization denominator fell below the configured tolerance.
class DegenerateFactorization : public std::runtime_error {
 public:
  explicit DegenerateFactorization(const std::string& what)
      : std::runtime_error(what) {}
};

/// A number-basis vector carries too much weight near the truncation edge
/// for the requested operation to be trusted.
class TruncationUnsafe : public std::runtime_error {
 public:
  explicit TruncationUnsafe(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed user input (CLI arguments, config values, sweep requests).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqjump

#endif
