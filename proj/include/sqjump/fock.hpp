#ifndef SQJUMP_FOCK_HPP
#define SQJUMP_FOCK_HPP

#include <vector>

#include "sqjump/dense.hpp"
#include "sqjump/errors.hpp"

namespace sqjump {

/// How much weight near the truncation edge disqualifies a state.
/// A vector is truncation-safe when the mass above level N - guard_band
/// stays below tail_tol.
struct TruncationPolicy {
  int guard_band = 32;
  double tail_tol = 1e-12;
};

/// Complex amplitudes over the truncated number basis |0..N>, index n =
/// photon number.
struct FockVector {
  ComplexVector amplitudes;

  int truncation() const { return static_cast<int>(amplitudes.size()) - 1; }
  double norm() const { return amplitudes.norm(); }

  /// Mass sum |c_n|^2 over n > N - guard_band.
  double tail_mass(int guard_band) const;
  bool truncation_safe(const TruncationPolicy& policy = {}) const;
};

FockVector vacuum_state(int truncation);
FockVector basis_state(int truncation, int n);

/// |<a|b>|^2 after normalizing both sides; global phase is irrelevant.
double fidelity(const FockVector& a, const FockVector& b);

struct OperatorMatrix {
  ComplexMatrix entries;
  bool hermitian = false;
};

struct LadderPair {
  OperatorMatrix a;
  OperatorMatrix a_dagger;
};

/// a[n-1, n] = sqrt(n); a_dagger is its conjugate transpose.  Requires N >= 2.
LadderPair ladder_ops(int truncation);

/// Exact projected matrix elements of the ladder-algebra generators:
///   K+[n+2, n] = sqrt((n+1)(n+2))/2,  K- = K+^T,  K3 = diag((n + 1/2)/2).
struct LadderAlgebra {
  ComplexMatrix K_plus;
  ComplexMatrix K_minus;
  ComplexMatrix K_c;
};
LadderAlgebra su11_generators(int truncation);

/// Q_lambda = (a† e^{i lambda} + a e^{-i lambda}) / sqrt(2).
OperatorMatrix quadrature_op(double lambda, int truncation);

/// H = eta*(K+ + K-) + 2*(omega0 + eta)*K3 with eta = (omega^2 - omega0^2)
/// / (2*omega0); the ladder operators are the ones of the reference
/// frequency omega0.  For omega == omega0 this is diag((n + 1/2)*omega0).
OperatorMatrix hamiltonian(double omega, int truncation,
                           double reference_omega = 1.0);

/// Holds one Hermitian eigendecomposition so that states can be advanced to
/// any time at matrix-vector cost.  Exactly unitary up to roundoff.
class Propagator {
 public:
  explicit Propagator(const OperatorMatrix& h);

  /// V exp(-i E t) V† state.  Throws TruncationUnsafe when the output tail
  /// mass exceeds the policy (the truncation is too small for this (omega, t)).
  FockVector advance(const FockVector& state, double t,
                     const TruncationPolicy& policy = {}) const;

 private:
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// One-shot exp(-i H t) state via Propagator.
FockVector propagate(const FockVector& state, const OperatorMatrix& h,
                     double t, const TruncationPolicy& policy = {});

/// <Q_lambda^2> - <Q_lambda>^2;  1/2 on the vacuum for every lambda.
double variance_of_quadrature(const FockVector& state, double lambda);

/// P_n = |c_n|^2.
std::vector<double> number_distribution(const FockVector& state);

/// Smallest even truncation that keeps the occupation tail of a squeeze of
/// parameter r (plus the guard band and a spreading margin) below tail_tol.
/// Pass the largest r reached along the evolution path, not just the final
/// one.
int recommended_truncation(double r, double tail_tol = 1e-12,
                           int guard_band = 32);

}  // namespace sqjump

#endif
