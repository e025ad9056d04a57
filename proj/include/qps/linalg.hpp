#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qps {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

double max_abs(const ComplexMatrix& a);
double hermiticity_defect(const ComplexMatrix& a);  // max |A - A'|
double unitarity_defect(const ComplexMatrix& u);    // max |U U' - I|

void require_square(const ComplexMatrix& a, const char* what);
void require_hermitian(const ComplexMatrix& a, double tol = 1e-12);
void require_unitary(const ComplexMatrix& u, double tol = 1e-10);

// Kronecker product with the subsystem-1-major convention: the composite
// basis index is i1 * rows(B) + i2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced density matrix over subsystem `keep` (0-based); dims lists the
// subsystem dimensions in subsystem-1-major order. Trace preserving.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep, const std::vector<int>& dims);

// exp(scale * H) for Hermitian H, by spectral decomposition. Unitary to
// working precision when scale is purely imaginary.
ComplexMatrix hermitian_expm(const ComplexMatrix& h, Complex scale);

// A Hamiltonian as the dimensionless generator H / (hbar chi), so that the
// evolution at dimensionless time chi*t is exp(-i chi_t matrix). hbar = 1
// throughout; chi is kept only to convert user-facing rates.
struct HamiltonianSpec {
    ComplexMatrix matrix;
    double coupling = 1.0;

    HamiltonianSpec(ComplexMatrix m, double chi = 1.0);
    ComplexMatrix evolution(double chi_t) const;
};

}  // namespace qps
