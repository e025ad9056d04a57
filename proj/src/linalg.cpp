#include "qps/linalg.hpp"

#include <stdexcept>
#include <string>

namespace qps {

double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const ComplexMatrix& a) {
    return max_abs(ComplexMatrix(a - a.adjoint()));
}

double unitarity_defect(const ComplexMatrix& u) {
    ComplexMatrix g = u * u.adjoint();
    g -= ComplexMatrix::Identity(u.rows(), u.rows());
    return max_abs(g);
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument(std::string(what) + ": square matrix required");
    }
}

void require_hermitian(const ComplexMatrix& a, double tol) {
    require_square(a, "require_hermitian");
    const double defect = hermiticity_defect(a);
    const double scale = std::max(1.0, max_abs(a));
    if (defect > tol * scale) {
        throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

void require_unitary(const ComplexMatrix& u, double tol) {
    require_square(u, "require_unitary");
    const double defect = unitarity_defect(u);
    if (defect > tol) {
        throw std::invalid_argument("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep, const std::vector<int>& dims) {
    require_square(rho, "partial_trace");
    if (keep < 0 || keep >= static_cast<int>(dims.size())) {
        throw std::invalid_argument("partial_trace: keep index out of range");
    }
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("partial_trace: subsystem dimensions must be positive");
        total *= d;
    }
    if (total != rho.rows()) {
        throw std::invalid_argument("partial_trace: dims are inconsistent with the matrix dimension");
    }

    // Split the composite index as (left, kept, right) with subsystem-1-major
    // strides; trace jointly over left and right.
    Eigen::Index left = 1, right = 1;
    for (int s = 0; s < keep; ++s) left *= dims[static_cast<std::size_t>(s)];
    for (std::size_t s = static_cast<std::size_t>(keep) + 1; s < dims.size(); ++s) right *= dims[s];
    const Eigen::Index dk = dims[static_cast<std::size_t>(keep)];

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index l = 0; l < left; ++l) {
                for (Eigen::Index r = 0; r < right; ++r) {
                    const Eigen::Index row = (l * dk + i) * right + r;
                    const Eigen::Index col = (l * dk + j) * right + r;
                    acc += rho(row, col);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

ComplexMatrix hermitian_expm(const ComplexMatrix& h, Complex scale) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_expm: eigendecomposition failed");
    }
    const ComplexMatrix& v = solver.eigenvectors();
    ComplexVector phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases(i) = std::exp(scale * solver.eigenvalues()(i));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

HamiltonianSpec::HamiltonianSpec(ComplexMatrix m, double chi) : matrix(std::move(m)), coupling(chi) {
    require_hermitian(matrix);
    if (!(coupling > 0.0)) throw std::invalid_argument("HamiltonianSpec: coupling must be positive");
}

ComplexMatrix HamiltonianSpec::evolution(double chi_t) const {
    return hermitian_expm(matrix, Complex(0.0, -chi_t));
}

}  // namespace qps
