#ifndef SQJUMP_DENSE_HPP
#define SQJUMP_DENSE_HPP

#include <complex>
#include <Eigen/Dense>

namespace sqjump {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense matrix exponential (scaling-and-squaring), valid for general
/// complex matrices. This is the brute-force route used by verification
/// code; production propagation goes through Hermitian eigendecomposition.
ComplexMatrix expm(const ComplexMatrix& m);

/// max_{ij} |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace sqjump

#endif
