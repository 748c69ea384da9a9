#ifndef SQJUMP_PROTOCOL_HPP
#define SQJUMP_PROTOCOL_HPP

#include <vector>

#include "sqjump/bch.hpp"
#include "sqjump/squeezed_state.hpp"

namespace sqjump {

/// Piecewise-constant frequency profile: omega0 until t = 0, omega1 on
/// (0, tau], omega0 again afterwards.  omega1 < omega0 (a downward first
/// jump) is admitted; every closed form below stays valid.
struct JumpProtocol {
  double omega0 = 1.0;
  double omega1 = 1.0;
  double tau = 1.0;

  JumpProtocol(double omega0_in, double omega1_in, double tau_in);

  /// (omega1^2 - omega0^2) / (2*omega0); negative for a downward jump.
  double eta0() const;
};

enum class Interval { Initial, One, Two };

/// Snapshot of the oscillator at one instant: always a squeezed state of the
/// omega0 oscillator.  r is continuous across t = tau and frozen at r(tau)
/// beyond it.
struct ProtocolState {
  double time = 0.0;
  SqueezedState squeezed;
  Interval interval = Interval::Initial;
};

/// Exponent coefficients of the interval-1 evolution operator at time t:
/// lambda_± = -i*eta0*t, lambda_3 = -2i*(omega0 + eta0)*t, so that
/// nu = ±i*omega1*t.  Requires 0 <= t <= tau.
LambdaSet lambdas_interval1(const JumpProtocol& p, double t);

/// r(t) = arsinh| (omega1^2 - omega0^2) / (2*omega0*omega1) * sin(omega1 t) |
/// for t <= tau (algebraically identical to the arcosh-sqrt form but stable
/// near zero squeeze); r(tau) for t > tau.
double squeezing_parameter(const JumpProtocol& p, double t);

/// The full state at time t: vacuum at t = 0, the factorized interval-1
/// state for 0 < t <= tau, and the tau-state freely evolved (phase shift
/// -2*omega0*(t - tau), r frozen) afterwards.
ProtocolState state_at(const JumpProtocol& p, double t);

/// Quadrature variance of state_at(p, t); continuous in t including at tau.
double variance_at(const JumpProtocol& p, double t, double lambda);

/// P(n) for the settled (t > tau) state:
///   P(2n) = sech(r_tau) * ((2n)!/(n!)^2 2^{2n}) * tanh(r_tau)^{2n},
///   P(odd) = 0 exactly.
/// Returns entries for n = 0..n_max (n_max even); throws TruncationUnsafe
/// when the missing tail 1 - sum exceeds tail_tol.
std::vector<double> photon_distribution(const JumpProtocol& p, int n_max,
                                        double tail_tol = 1e-12);

/// Single P(n) with no tail gating.
double photon_probability(const JumpProtocol& p, int n);

/// Probability of remaining in the ground state after both jumps:
///   Z = [1 + ((omega1^2-omega0^2)/(2 omega0 omega1))^2 sin^2(omega1 tau)]^{-1/2}
/// Equal to sech(r(tau)); independent of t > tau; 1 when omega1 = omega0 or
/// tau is an integer multiple of pi/omega1.
double persistence(const JumpProtocol& p);

/// P_E = 1 - Z; pi/omega1-periodic in tau.
double excitation_probability(const JumpProtocol& p);

}  // namespace sqjump

#endif
