#ifndef SQJUMP_SQUEEZED_STATE_HPP
#define SQJUMP_SQUEEZED_STATE_HPP

#include "sqjump/fock.hpp"

namespace sqjump {

/// Canonical squeezed-vacuum representation: squeeze magnitude r >= 0 and
/// phase phi in [0, 2*pi), relative to the quadratures of reference_omega.
/// Global phase is discarded at this boundary; r = 0 is the vacuum
/// regardless of phi.
struct SqueezedState {
  double r = 0.0;
  double phi = 0.0;
  double reference_omega = 1.0;

  SqueezedState() = default;
  SqueezedState(double r_in, double phi_in, double reference_omega_in = 1.0);
};

/// Map the dynamical expansion factor L+ = |L+| e^{i theta} onto the
/// canonical state: r = artanh|L+|, phi = theta + pi (the two expansions
/// carry opposite sign conventions on the even-state coefficient).
/// Rejects |L+| >= 1 - 1e-12.
SqueezedState squeezed_from_factor(Complex Lambda_plus,
                                   double reference_omega = 1.0);

/// Even-state expansion  c_{2n} = sqrt(sech r) * (sqrt((2n)!)/n!) *
/// (-e^{i phi} tanh(r)/2)^n, odd coefficients zero.  The factorial ratio is
/// built by a multiplicative recurrence.  N must be even; throws
/// TruncationUnsafe when the dropped tail exceeds tail_tol.
FockVector to_fock(const SqueezedState& s, int truncation,
                   double tail_tol = 1e-12);

/// (Delta Q_lambda)^2 = [e^{2r} sin^2(lambda - phi/2)
///                       + e^{-2r} cos^2(lambda - phi/2)] / 2.
/// Minimum e^{-2r}/2 at lambda = phi/2, maximum e^{2r}/2 a quarter turn away.
double variance(const SqueezedState& s, double lambda);

/// Evolution under the reference-frequency oscillator: r unchanged,
/// phi -> phi - 2*reference_omega*t (mod 2*pi), global phase discarded.
SqueezedState evolve_free(const SqueezedState& s, double t);

}  // namespace sqjump

#endif
