#include "sqjump/fock.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace sqjump {

ComplexMatrix expm(const ComplexMatrix& m) { return m.exp(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double FockVector::tail_mass(int guard_band) const {
  const int n = truncation();
  const int first = std::max(0, n - guard_band + 1);
  double mass = 0.0;
  for (int i = first; i <= n; ++i) mass += std::norm(amplitudes[i]);
  return mass;
}

bool FockVector::truncation_safe(const TruncationPolicy& policy) const {
  return tail_mass(policy.guard_band) <= policy.tail_tol;
}

FockVector vacuum_state(int truncation) { return basis_state(truncation, 0); }

FockVector basis_state(int truncation, int n) {
  if (truncation < 0 || n < 0 || n > truncation)
    throw std::invalid_argument("basis_state: need 0 <= n <= truncation");
  FockVector v{ComplexVector::Zero(truncation + 1)};
  v.amplitudes[n] = 1.0;
  return v;
}

double fidelity(const FockVector& a, const FockVector& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("fidelity: mismatched truncations");
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("fidelity: zero vector");
  const Complex overlap = a.amplitudes.dot(b.amplitudes) / (na * nb);
  return std::norm(overlap);
}

LadderPair ladder_ops(int truncation) {
  if (truncation < 2) throw std::invalid_argument("ladder_ops: need truncation >= 2");
  ComplexMatrix a = ComplexMatrix::Zero(truncation + 1, truncation + 1);
  for (int n = 1; n <= truncation; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  LadderPair pair;
  pair.a_dagger.entries = a.adjoint();
  pair.a.entries = std::move(a);
  pair.a.hermitian = false;
  pair.a_dagger.hermitian = false;
  return pair;
}

LadderAlgebra su11_generators(int truncation) {
  if (truncation < 2) throw std::invalid_argument("su11_generators: need truncation >= 2");
  const int dim = truncation + 1;
  LadderAlgebra g;
  g.K_plus = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n + 2 <= truncation; ++n) {
    g.K_plus(n + 2, n) =
        0.5 * std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + 2));
  }
  g.K_minus = g.K_plus.adjoint();
  g.K_c = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n <= truncation; ++n) g.K_c(n, n) = 0.5 * (n + 0.5);
  return g;
}

OperatorMatrix quadrature_op(double lambda, int truncation) {
  const LadderPair ops = ladder_ops(truncation);
  OperatorMatrix q;
  q.entries = (ops.a_dagger.entries * std::exp(Complex(0.0, lambda)) +
               ops.a.entries * std::exp(Complex(0.0, -lambda))) /
              std::sqrt(2.0);
  q.hermitian = true;
  return q;
}

OperatorMatrix hamiltonian(double omega, int truncation, double reference_omega) {
  if (omega <= 0.0 || reference_omega <= 0.0)
    throw std::invalid_argument("hamiltonian: frequencies must be positive");
  const double eta =
      (omega * omega - reference_omega * reference_omega) / (2.0 * reference_omega);
  const LadderAlgebra g = su11_generators(truncation);
  OperatorMatrix h;
  h.entries = eta * (g.K_plus + g.K_minus) + 2.0 * (reference_omega + eta) * g.K_c;
  h.hermitian = true;
  return h;
}

Propagator::Propagator(const OperatorMatrix& h) {
  if (!h.hermitian)
    throw std::invalid_argument("Propagator: operator is not flagged hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.entries);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Propagator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

FockVector Propagator::advance(const FockVector& state, double t,
                               const TruncationPolicy& policy) const {
  if (state.amplitudes.size() != eigenvectors_.rows())
    throw std::invalid_argument("Propagator::advance: dimension mismatch");
  ComplexVector modal = eigenvectors_.adjoint() * state.amplitudes;
  for (Eigen::Index i = 0; i < modal.size(); ++i) {
    modal[i] *= std::exp(Complex(0.0, -eigenvalues_[i] * t));
  }
  FockVector out{eigenvectors_ * modal};
  if (!out.truncation_safe(policy)) {
    std::ostringstream msg;
    msg << "propagation left tail mass " << out.tail_mass(policy.guard_band)
        << " above tolerance " << policy.tail_tol << " at truncation "
        << out.truncation() << "; increase the truncation for this (omega, t)";
    throw TruncationUnsafe(msg.str());
  }
  return out;
}

FockVector propagate(const FockVector& state, const OperatorMatrix& h, double t,
                     const TruncationPolicy& policy) {
  const double n = state.norm();
  if (std::abs(n - 1.0) > 1e-6)
    throw std::invalid_argument("propagate: state is not normalized");
  return Propagator(h).advance(state, t, policy);
}

double variance_of_quadrature(const FockVector& state, double lambda) {
  const OperatorMatrix q = quadrature_op(lambda, state.truncation());
  const ComplexVector applied = q.entries * state.amplitudes;
  const double mean = state.amplitudes.dot(applied).real();
  const double second = applied.squaredNorm();
  return second - mean * mean;
}

std::vector<double> number_distribution(const FockVector& state) {
  std::vector<double> p(state.truncation() + 1);
  for (int n = 0; n < static_cast<int>(p.size()); ++n) p[n] = std::norm(state.amplitudes[n]);
  return p;
}

int recommended_truncation(double r, double tail_tol, int guard_band) {
  const double q = std::tanh(std::abs(r)) * std::tanh(std::abs(r));
  // walk the even-state occupation of a squeeze of parameter r until the
  // remaining tail is two decades under the target
  const double target = tail_tol * 1e-2;
  double p = 1.0 / std::cosh(std::abs(r));
  double sum = p;
  int n = 0;
  const int cap = 4096;
  while (1.0 - sum > target && 2 * n < cap) {
    p *= q * (2.0 * n + 1.0) / (2.0 * n + 2.0);
    sum += p;
    ++n;
  }
  // margin for transient spreading beyond the settled distribution
  int levels = static_cast<int>(std::ceil(1.25 * 2 * n)) + guard_band + 32;
  levels += levels % 2;
  return std::max(64, levels);
}

}  // namespace sqjump
