#ifndef SQJUMP_VERIFY_HPP
#define SQJUMP_VERIFY_HPP

#include <string>
#include <vector>

namespace sqjump {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // worst measured value
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string note;        // failure detail, e.g. a caught exception
};

struct RunReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  int n_random = 50;
  unsigned long long seed = 42;
  int fock_truncation = 128;
};

/// Seeded, reproducible self-check suite: disentangling identities on exact
/// 2x2 representations, the |L3| + |L+|^2 = 1 law, branch invariance,
/// propagator unitarity/hermiticity/parity, analytic-vs-numeric fidelity,
/// distribution and variance agreement, continuity, and the Heisenberg
/// floor.  Throws UsageError when options.n_random < 1.
RunReport run_verification(const VerifyOptions& options);

/// Aligned text, one line per check plus a summary line.
std::string format_report(const RunReport& report);

/// Same content as JSON.
std::string report_to_json(const RunReport& report, const VerifyOptions& options);

}  // namespace sqjump

#endif
