#ifndef SQJUMP_BCH_HPP
#define SQJUMP_BCH_HPP

#include "sqjump/dense.hpp"
#include "sqjump/errors.hpp"

namespace sqjump {

/// Which three-generator algebra the exponent coefficients live in:
/// [K-, K+] = 2*eps*K3, [K3, K±] = ±K±.  eps = +1 is the ladder algebra
/// su(1,1) (K+ = a†²/2, K- = a²/2, K3 = (a†a + aa†)/4); eps = -1 is su(2).
enum class AlgebraSign : int { su11 = +1, su2 = -1 };

inline int epsilon(AlgebraSign s) { return static_cast<int>(s); }

/// Coefficients of a single combined exponent
/// exp(lambda_plus*K+ + lambda_minus*K- + lambda_three*K3).
struct LambdaSet {
  Complex lambda_plus{0.0, 0.0};
  Complex lambda_minus{0.0, 0.0};
  Complex lambda_three{0.0, 0.0};
  AlgebraSign sign = AlgebraSign::su11;
};

/// Coefficients of the disentangled (normal-ordered) product
///   exp(Lambda_plus*K+) * exp(log_Lambda_three*K3) * exp(Lambda_minus*K-).
///
/// Lambda_three = exp(log_Lambda_three) always holds.  log_Lambda_three is
/// the exponent branch that is continuous along theta -> exp(theta*combined),
/// which is what makes the operator identity hold entrywise; the principal
/// log of Lambda_three can differ from it by 2*pi*i*k.  Physics downstream
/// only consumes |Lambda_three| and arg(Lambda_plus), so it never sees the
/// branch.
struct FactorizedEvolution {
  Complex Lambda_plus{0.0, 0.0};
  Complex Lambda_three{1.0, 0.0};
  Complex Lambda_minus{0.0, 0.0};
  Complex log_Lambda_three{0.0, 0.0};
};

/// nu = sqrt(lambda_three^2/4 - eps*lambda_plus*lambda_minus), principal
/// branch.  The branch choice is irrelevant downstream: every consumer uses
/// even functions of nu (cosh nu, sinh(nu)/nu).
Complex nu_of(const LambdaSet& lambdas);

/// sinh(nu)/nu with an even Taylor kernel (through nu^8) below |nu| = 1e-4,
/// removing the 0/0 at nu = 0 and keeping results invariant under nu -> -nu.
Complex sinhc(Complex nu);

/// Disentangle exp(l+*K+ + l-*K- + l3*K3) into the normal-ordered product.
///
///   Lambda_±    = l± * sinhc(nu) / d1
///   Lambda_3    = d1^{-2},   d1 = cosh(nu) - (l3/2)*sinhc(nu)
///
/// Throws DegenerateFactorization when |d1| < degeneracy_tol (a caustic-like
/// point where the normal-ordered form does not exist).  As nu -> 0 the
/// result tends smoothly to Lambda_± = l±/(1 - l3/2), Lambda_3 = (1-l3/2)^-2.
FactorizedEvolution factorize(const LambdaSet& lambdas,
                              double degeneracy_tol = 1e-12);

/// Same as factorize but with the disentangling eigenvalue supplied by the
/// caller; exposed so branch invariance (nu vs -nu) can be tested directly.
FactorizedEvolution factorize_with_nu(const LambdaSet& lambdas, Complex nu,
                                      double degeneracy_tol = 1e-12);

/// Brute-force representation check of the disentangling identity.
///
/// Builds both sides with dense matrix exponentials and returns the max
/// absolute entrywise deviation.  For su(1,1) the generators are the
/// number-basis matrices truncated at N = rep_dim and the deviation is
/// restricted to the upper-left (rep_dim - guard_band) block; for su(2) the
/// faithful 2x2 spin-1/2 representation is used and guard_band is ignored.
///
/// Caveat, measured not guessed: for su(1,1) the truncated exponential of
/// the *combined* generator is only trustworthy in columns n0 with
/// n0 * exp(2*r_max) well below rep_dim (the flow scales occupation
/// multiplicatively), so this check is meaningful at small exponents or
/// generous rep_dim; the factored side is exact at any truncation.
double verify_factorization(const LambdaSet& lambdas,
                            const FactorizedEvolution& fe, int rep_dim,
                            int guard_band = 16);

}  // namespace sqjump

#endif
