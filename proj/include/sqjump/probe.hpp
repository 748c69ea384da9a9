#ifndef SQJUMP_PROBE_HPP
#define SQJUMP_PROBE_HPP

#include <string>
#include <vector>

#include "sqjump/protocol.hpp"

namespace sqjump {

/// Everything about one parameter point, ready for printing.
struct ProbeRecord {
  JumpProtocol protocol{1.0, 1.0, 1.0};
  double t = 0.0;
  double lambda = 0.0;
  Interval interval = Interval::Initial;
  double r = 0.0;
  double phi = 0.0;
  double variance_lambda = 0.5;
  double variance_conjugate = 0.5;
  double variance_product = 0.25;
  double persistence_z = 1.0;
  double excitation_pe = 0.0;
  std::vector<double> even_probabilities;  // P(0), P(2), ..., first 10
};

ProbeRecord probe(const JumpProtocol& p, double t, double lambda);

std::string format_probe_text(const ProbeRecord& rec);
std::string format_probe_json(const ProbeRecord& rec);

}  // namespace sqjump

#endif
