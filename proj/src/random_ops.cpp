#include "qps/random_ops.hpp"

namespace qps {

ComplexMatrix random_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex rii = r(i, i);
        q.col(i) *= (std::abs(rii) > 0.0) ? rii / std::abs(rii) : Complex(1.0, 0.0);
    }
    return q;
}

ComplexMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

ComplexVector random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi /= psi.norm();
    return psi;
}

}  // namespace qps
