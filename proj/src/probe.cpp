#include "sqjump/probe.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace sqjump {

namespace {

const char* interval_name(Interval iv) {
  switch (iv) {
    case Interval::Initial: return "initial";
    case Interval::One: return "one";
    case Interval::Two: return "two";
  }
  return "?";
}

}  // namespace

ProbeRecord probe(const JumpProtocol& p, double t, double lambda) {
  ProbeRecord rec;
  rec.protocol = p;
  rec.t = t;
  rec.lambda = lambda;
  const ProtocolState state = state_at(p, t);
  rec.interval = state.interval;
  rec.r = state.squeezed.r;
  rec.phi = state.squeezed.phi;
  rec.variance_lambda = variance(state.squeezed, lambda);
  rec.variance_conjugate = variance(state.squeezed, lambda + std::numbers::pi / 2.0);
  rec.variance_product = rec.variance_lambda * rec.variance_conjugate;
  rec.persistence_z = persistence(p);
  rec.excitation_pe = excitation_probability(p);
  rec.even_probabilities.reserve(10);
  for (int n = 0; n < 20; n += 2) {
    rec.even_probabilities.push_back(photon_probability(p, n));
  }
  return rec;
}

std::string format_probe_text(const ProbeRecord& rec) {
  std::ostringstream out;
  char line[160];
  const auto emit = [&](const char* key, double value) {
    std::snprintf(line, sizeof line, "%-22s %.12g\n", key, value);
    out << line;
  };
  emit("omega0", rec.protocol.omega0);
  emit("omega1", rec.protocol.omega1);
  emit("tau", rec.protocol.tau);
  emit("t", rec.t);
  emit("lambda", rec.lambda);
  std::snprintf(line, sizeof line, "%-22s %s\n", "interval",
                interval_name(rec.interval));
  out << line;
  emit("r", rec.r);
  emit("phi", rec.phi);
  emit("variance", rec.variance_lambda);
  emit("variance_conjugate", rec.variance_conjugate);
  emit("variance_product", rec.variance_product);
  emit("persistence_Z", rec.persistence_z);
  emit("excitation_P_E", rec.excitation_pe);
  for (std::size_t i = 0; i < rec.even_probabilities.size(); ++i) {
    char key[24];
    std::snprintf(key, sizeof key, "P(%zu)", 2 * i);
    emit(key, rec.even_probabilities[i]);
  }
  return out.str();
}

std::string format_probe_json(const ProbeRecord& rec) {
  nlohmann::json j;
  j["omega0"] = rec.protocol.omega0;
  j["omega1"] = rec.protocol.omega1;
  j["tau"] = rec.protocol.tau;
  j["t"] = rec.t;
  j["lambda"] = rec.lambda;
  j["interval"] = interval_name(rec.interval);
  j["r"] = rec.r;
  j["phi"] = rec.phi;
  j["variance"] = rec.variance_lambda;
  j["variance_conjugate"] = rec.variance_conjugate;
  j["variance_product"] = rec.variance_product;
  j["persistence_Z"] = rec.persistence_z;
  j["excitation_P_E"] = rec.excitation_pe;
  j["even_probabilities"] = rec.even_probabilities;
  return j.dump(2) + "\n";
}

}  // namespace sqjump
