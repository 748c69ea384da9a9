#include "sqjump/bch.hpp"

#include <cmath>
#include <sstream>

#include "sqjump/fock.hpp"

namespace sqjump {

Complex nu_of(const LambdaSet& lambdas) {
  const Complex nu2 = lambdas.lambda_three * lambdas.lambda_three / 4.0 -
                      static_cast<double>(epsilon(lambdas.sign)) *
                          lambdas.lambda_plus * lambdas.lambda_minus;
  return std::sqrt(nu2);
}

Complex sinhc(Complex nu) {
  if (std::abs(nu) < 1e-4) {
    const Complex x = nu * nu;
    // even series through nu^8; exact to machine precision at this cutoff
    return 1.0 + x / 6.0 * (1.0 + x / 20.0 * (1.0 + x / 42.0 * (1.0 + x / 72.0)));
  }
  return std::sinh(nu) / nu;
}

namespace {

// d1(theta) = cosh(nu*theta) - (lambda3/2) * theta * sinhc(nu*theta).
// The factorization denominator, evaluated along the interpolation
// exp(theta * combined exponent); d1(0) = 1, d1(1) is the full denominator.
Complex d1_at(const LambdaSet& l, Complex nu, double theta) {
  const Complex nth = nu * theta;
  return std::cosh(nth) - 0.5 * l.lambda_three * theta * sinhc(nth);
}

// Rotation of d1 across [theta_a, theta_b], bisecting until each piece turns
// by less than ~1 rad so no increment can alias past the branch cut.
double arg_increment(const LambdaSet& l, Complex nu, double theta_a,
                     Complex d_a, double theta_b, Complex d_b, int depth) {
  const double turn = std::arg(d_b / d_a);
  if (std::abs(turn) <= 1.0 || depth >= 48) return turn;
  const double theta_m = 0.5 * (theta_a + theta_b);
  const Complex d_m = d1_at(l, nu, theta_m);
  return arg_increment(l, nu, theta_a, d_a, theta_m, d_m, depth + 1) +
         arg_increment(l, nu, theta_m, d_m, theta_b, d_b, depth + 1);
}

// Continuous arg of d1(theta) from theta = 0 (where d1 = 1) to theta = 1.
double unwrapped_arg_d1(const LambdaSet& l, Complex nu) {
  const int steps = std::max(
      16, static_cast<int>(std::ceil(2.0 * (std::abs(nu) + std::abs(l.lambda_three)))));
  double total = 0.0;
  double theta_prev = 0.0;
  Complex d_prev{1.0, 0.0};
  for (int k = 1; k <= steps; ++k) {
    const double theta = static_cast<double>(k) / steps;
    const Complex d = d1_at(l, nu, theta);
    total += arg_increment(l, nu, theta_prev, d_prev, theta, d, 0);
    theta_prev = theta;
    d_prev = d;
  }
  return total;
}

}  // namespace

FactorizedEvolution factorize_with_nu(const LambdaSet& lambdas, Complex nu,
                                      double degeneracy_tol) {
  const Complex sc = sinhc(nu);
  const Complex d1 = std::cosh(nu) - 0.5 * lambdas.lambda_three * sc;
  if (std::abs(d1) < degeneracy_tol) {
    std::ostringstream msg;
    msg << "factorization denominator magnitude " << std::abs(d1)
        << " below tolerance " << degeneracy_tol
        << "; the normal-ordered form does not exist here";
    throw DegenerateFactorization(msg.str());
  }

  FactorizedEvolution fe;
  fe.Lambda_plus = lambdas.lambda_plus * sc / d1;
  fe.Lambda_minus = lambdas.lambda_minus * sc / d1;
  fe.Lambda_three = 1.0 / (d1 * d1);
  fe.log_Lambda_three =
      -2.0 * Complex(std::log(std::abs(d1)), unwrapped_arg_d1(lambdas, nu));
  return fe;
}

FactorizedEvolution factorize(const LambdaSet& lambdas, double degeneracy_tol) {
  return factorize_with_nu(lambdas, nu_of(lambdas), degeneracy_tol);
}

namespace {

struct Rep {
  ComplexMatrix K_plus, K_minus, K_three;
};

// Faithful non-unitary 2x2 representation of [K-,K+] = 2*eps*K3.
Rep two_dim_rep(AlgebraSign sign) {
  Rep rep;
  rep.K_plus = ComplexMatrix::Zero(2, 2);
  rep.K_minus = ComplexMatrix::Zero(2, 2);
  rep.K_three = ComplexMatrix::Zero(2, 2);
  rep.K_plus(0, 1) = 1.0;
  rep.K_minus(1, 0) = (sign == AlgebraSign::su2) ? 1.0 : -1.0;
  rep.K_three(0, 0) = 0.5;
  rep.K_three(1, 1) = -0.5;
  return rep;
}

}  // namespace

double verify_factorization(const LambdaSet& lambdas,
                            const FactorizedEvolution& fe, int rep_dim,
                            int guard_band) {
  if (rep_dim < 2) throw std::invalid_argument("verify_factorization: rep_dim must be >= 2");

  Rep rep;
  int block;
  if (lambdas.sign == AlgebraSign::su2) {
    rep = two_dim_rep(AlgebraSign::su2);
    block = 2;
  } else {
    const LadderAlgebra g = su11_generators(rep_dim);
    rep.K_plus = g.K_plus;
    rep.K_minus = g.K_minus;
    rep.K_three = g.K_c;
    block = rep_dim - guard_band;
    if (block < 1)
      throw std::invalid_argument("verify_factorization: guard band leaves no block");
  }

  const ComplexMatrix combined = expm(lambdas.lambda_plus * rep.K_plus +
                                      lambdas.lambda_minus * rep.K_minus +
                                      lambdas.lambda_three * rep.K_three);

  const int dim = static_cast<int>(rep.K_three.rows());
  ComplexMatrix middle = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    middle(i, i) = std::exp(fe.log_Lambda_three * rep.K_three(i, i));
  }
  const ComplexMatrix product =
      expm(fe.Lambda_plus * rep.K_plus) * middle * expm(fe.Lambda_minus * rep.K_minus);

  return max_abs_diff(combined.topLeftCorner(block, block),
                      product.topLeftCorner(block, block));
}

}  // namespace sqjump
