#include "sqjump/protocol.hpp"

#include <cmath>
#include <sstream>

namespace sqjump {

JumpProtocol::JumpProtocol(double omega0_in, double omega1_in, double tau_in)
    : omega0(omega0_in), omega1(omega1_in), tau(tau_in) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0) || !(omega1 > 0.0) ||
      !std::isfinite(omega1) || !(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument(
        "JumpProtocol: omega0, omega1 and tau must be positive and finite");
  }
}

double JumpProtocol::eta0() const {
  return (omega1 * omega1 - omega0 * omega0) / (2.0 * omega0);
}

LambdaSet lambdas_interval1(const JumpProtocol& p, double t) {
  if (t < 0.0 || t > p.tau)
    throw std::invalid_argument("lambdas_interval1: need 0 <= t <= tau");
  const double eta = p.eta0();
  LambdaSet l;
  l.lambda_plus = Complex(0.0, -eta * t);
  l.lambda_minus = l.lambda_plus;
  l.lambda_three = Complex(0.0, -2.0 * (p.omega0 + eta) * t);
  l.sign = AlgebraSign::su11;
  return l;
}

namespace {

// (omega1^2 - omega0^2) / (2 omega0 omega1): the jump-strength prefactor.
double jump_ratio(const JumpProtocol& p) {
  return (p.omega1 * p.omega1 - p.omega0 * p.omega0) / (2.0 * p.omega0 * p.omega1);
}

double interval1_r(const JumpProtocol& p, double t) {
  // arsinh form of arcosh(sqrt(1 + x^2 sin^2)), exact and stable near zero
  return std::asinh(std::abs(jump_ratio(p) * std::sin(p.omega1 * t)));
}

}  // namespace

double squeezing_parameter(const JumpProtocol& p, double t) {
  if (t < 0.0) throw std::invalid_argument("squeezing_parameter: t must be >= 0");
  return interval1_r(p, std::min(t, p.tau));
}

ProtocolState state_at(const JumpProtocol& p, double t) {
  if (t < 0.0) throw std::invalid_argument("state_at: t must be >= 0");
  if (t == 0.0) {
    return ProtocolState{0.0, SqueezedState(0.0, 0.0, p.omega0), Interval::Initial};
  }
  const double t1 = std::min(t, p.tau);
  const FactorizedEvolution fe = factorize(lambdas_interval1(p, t1));
  SqueezedState s = squeezed_from_factor(fe.Lambda_plus, p.omega0);
  if (t <= p.tau) {
    return ProtocolState{t, s, Interval::One};
  }
  return ProtocolState{t, evolve_free(s, t - p.tau), Interval::Two};
}

double variance_at(const JumpProtocol& p, double t, double lambda) {
  return variance(state_at(p, t).squeezed, lambda);
}

double photon_probability(const JumpProtocol& p, int n) {
  if (n < 0) throw std::invalid_argument("photon_probability: n must be >= 0");
  if (n % 2 != 0) return 0.0;
  const double r = squeezing_parameter(p, p.tau);
  const double q = std::tanh(r) * std::tanh(r);
  double prob = 1.0 / std::cosh(r);
  for (int k = 0; k < n / 2; ++k) {
    prob *= q * (2.0 * k + 1.0) / (2.0 * k + 2.0);
  }
  return prob;
}

std::vector<double> photon_distribution(const JumpProtocol& p, int n_max,
                                        double tail_tol) {
  if (n_max < 0 || n_max % 2 != 0)
    throw std::invalid_argument("photon_distribution: n_max must be even and >= 0");
  const double r = squeezing_parameter(p, p.tau);
  const double q = std::tanh(r) * std::tanh(r);

  std::vector<double> dist(n_max + 1, 0.0);
  double prob = 1.0 / std::cosh(r);
  double sum = prob;
  dist[0] = prob;
  for (int k = 0; 2 * k + 2 <= n_max; ++k) {
    prob *= q * (2.0 * k + 1.0) / (2.0 * k + 2.0);
    dist[2 * k + 2] = prob;
    sum += prob;
  }

  const double deficit = 1.0 - sum;
  if (deficit > tail_tol) {
    std::ostringstream msg;
    msg << "photon_distribution: missing tail " << deficit << " above tolerance "
        << tail_tol << " at n_max " << n_max;
    throw TruncationUnsafe(msg.str());
  }
  return dist;
}

double persistence(const JumpProtocol& p) {
  const double x = jump_ratio(p) * std::sin(p.omega1 * p.tau);
  return 1.0 / std::sqrt(1.0 + x * x);
}

double excitation_probability(const JumpProtocol& p) {
  return 1.0 - persistence(p);
}

}  // namespace sqjump
