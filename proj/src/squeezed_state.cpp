#include "sqjump/squeezed_state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sqjump {

namespace {

double wrap_angle(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

}  // namespace

SqueezedState::SqueezedState(double r_in, double phi_in, double reference_omega_in)
    : r(r_in), phi(wrap_angle(phi_in)), reference_omega(reference_omega_in) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("SqueezedState: r must be finite and >= 0");
  if (!(reference_omega > 0.0))
    throw std::invalid_argument("SqueezedState: reference_omega must be positive");
}

SqueezedState squeezed_from_factor(Complex Lambda_plus, double reference_omega) {
  const double magnitude = std::abs(Lambda_plus);
  if (magnitude >= 1.0 - 1e-12) {
    std::ostringstream msg;
    msg << "squeezed_from_factor: |Lambda_plus| = " << magnitude
        << " has no finite squeeze parameter";
    throw std::invalid_argument(msg.str());
  }
  const double r = std::atanh(magnitude);
  const double theta = std::arg(Lambda_plus);
  return SqueezedState(r, theta + std::numbers::pi, reference_omega);
}

FockVector to_fock(const SqueezedState& s, int truncation, double tail_tol) {
  if (truncation < 2 || truncation % 2 != 0)
    throw std::invalid_argument("to_fock: truncation must be even and >= 2");

  FockVector v{ComplexVector::Zero(truncation + 1)};
  const Complex w = -0.5 * std::exp(Complex(0.0, s.phi)) * std::tanh(s.r);
  Complex amp = std::sqrt(1.0 / std::cosh(s.r));
  double sum = std::norm(amp);
  v.amplitudes[0] = amp;
  for (int n = 0; 2 * n + 2 <= truncation; ++n) {
    // c_{2(n+1)} / c_{2n} = w * sqrt((2n+1)(2n+2)) / (n+1)
    amp *= w * std::sqrt((2.0 * n + 1.0) * (2.0 * n + 2.0)) / (n + 1.0);
    v.amplitudes[2 * n + 2] = amp;
    sum += std::norm(amp);
  }

  const double deficit = 1.0 - sum;
  if (deficit > tail_tol) {
    std::ostringstream msg;
    msg << "to_fock: dropped tail " << deficit << " above tolerance " << tail_tol
        << " at truncation " << truncation << " (r = " << s.r << ")";
    throw TruncationUnsafe(msg.str());
  }
  return v;
}

double variance(const SqueezedState& s, double lambda) {
  const double angle = lambda - 0.5 * s.phi;
  const double sn = std::sin(angle), cs = std::cos(angle);
  return 0.5 * (std::exp(2.0 * s.r) * sn * sn + std::exp(-2.0 * s.r) * cs * cs);
}

SqueezedState evolve_free(const SqueezedState& s, double t) {
  return SqueezedState(s.r, s.phi - 2.0 * s.reference_omega * t, s.reference_omega);
}

}  // namespace sqjump
