#include "qps/pseudo_classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qps {

ComplexMatrix LinearHamiltonian::to_operator(const PrimeDim& dim) const {
    if (coeffs.empty()) throw std::invalid_argument("LinearHamiltonian: no qudits");
    const int d = dim.value();
    const ComplexMatrix x = position_operator(dim);
    const ComplexMatrix p = momentum_operator(dim);
    const ComplexMatrix eye = ComplexMatrix::Identity(d, d);

    int total = 1;
    for (int q = 0; q < n_qudits(); ++q) total *= d;
    ComplexMatrix h = ComplexMatrix::Zero(total, total);
    for (int q = 0; q < n_qudits(); ++q) {
        ComplexMatrix term = ComplexMatrix::Identity(1, 1);
        for (int s = 0; s < n_qudits(); ++s) {
            const ComplexMatrix& factor =
                (s == q) ? ComplexMatrix(coeffs[static_cast<std::size_t>(q)].first * x +
                                         coeffs[static_cast<std::size_t>(q)].second * p)
                         : eye;
            term = kron(term, factor);
        }
        h += term;
    }
    h += offset * ComplexMatrix::Identity(total, total);
    return h;
}

RealVector LinearHamiltonian::lattice_function(const PhaseSpace& space) const {
    if (n_qudits() != space.n_qudits()) {
        throw std::invalid_argument("LinearHamiltonian: qudit count does not match the lattice");
    }
    RealVector h(space.n_sites());
    for (int site = 0; site < space.n_sites(); ++site) {
        auto c = space.coords_of(site);
        double v = offset;
        for (int q = 0; q < n_qudits(); ++q) {
            v += coeffs[static_cast<std::size_t>(q)].first * c[2 * static_cast<std::size_t>(q)] +
                 coeffs[static_cast<std::size_t>(q)].second * c[2 * static_cast<std::size_t>(q) + 1];
        }
        h(site) = v;
    }
    return h;
}

const char* to_string(CommensurabilityClass c) {
    switch (c) {
        case CommensurabilityClass::kStrict: return "strict";
        case CommensurabilityClass::kWeakOdd: return "weak_odd";
        case CommensurabilityClass::kIncommensurate: return "incommensurate";
    }
    return "unknown";
}

CommensurabilityReport classify_commensurability(const LinearHamiltonian& h, double tau,
                                                 const PrimeDim& dim, double integer_tol) {
    if (!(tau > 0.0)) throw std::invalid_argument("classify_commensurability: tau must be positive");
    CommensurabilityReport report;
    report.offset = h.offset;

    bool all_integer = true;
    bool all_even = true;
    std::vector<long long> rounded_a, rounded_b;
    for (const auto& [a, b] : h.coeffs) {
        const double ka = a * dim.value() * tau / std::numbers::pi;
        const double kb = b * dim.value() * tau / std::numbers::pi;
        report.k_a.push_back(ka);
        report.k_b.push_back(kb);
        for (double k : {ka, kb}) {
            const double r = std::round(k);
            if (std::abs(k - r) >= integer_tol) {
                all_integer = false;
            } else if (std::llround(r) % 2 != 0) {
                all_even = false;
            }
        }
        rounded_a.push_back(std::llround(ka));
        rounded_b.push_back(std::llround(kb));
    }

    if (all_integer && all_even) {
        report.classification = CommensurabilityClass::kStrict;
        for (std::size_t q = 0; q < h.coeffs.size(); ++q) {
            report.shift.push_back(PhasePoint{dim.reduce_signed(rounded_b[q] / 2),
                                              dim.reduce_signed(-rounded_a[q] / 2)});
        }
    } else if (all_integer) {
        report.classification = CommensurabilityClass::kWeakOdd;
    } else {
        report.classification = CommensurabilityClass::kIncommensurate;
    }
    return report;
}

ShiftKernelCheck verify_shift_kernel(const LinearHamiltonian& h, double tau, const PrimeDim& dim) {
    const PhaseSpace space(dim, h.n_qudits());
    const ComplexMatrix u = hermitian_expm(h.to_operator(dim), Complex(0.0, -tau));
    WignerKernel kernel = kernel_fourier_form(u, space);

    ShiftKernelCheck check{classify_commensurability(h, tau, dim), false, false, false,
                           std::move(kernel)};
    check.kernel_is_permutation = is_permutation_kernel(check.kernel);

    if (check.report.classification == CommensurabilityClass::kStrict) {
        std::vector<int> shift_coords;
        for (const PhasePoint& s : check.report.shift) {
            shift_coords.push_back(dim.reduce(s.m));
            shift_coords.push_back(dim.reduce(s.n));
        }
        const int shift_index = space.index_of(shift_coords);
        bool match = check.kernel_is_permutation;
        for (int ini = 0; match && ini < space.n_sites(); ++ini) {
            const int fin = space.add(ini, shift_index);
            if (std::abs(check.kernel.entries(fin, ini) - 1.0) > kKernelImagTol) match = false;
        }
        check.matches_predicted_shift = match;
        check.consistent = match;
    } else {
        check.consistent = !check.kernel_is_permutation;
    }
    return check;
}

}  // namespace qps
