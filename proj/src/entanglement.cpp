#include "qps/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

namespace {

const PrimeDim& qutrit() {
    static const PrimeDim dim(3);
    return dim;
}

double purity_to_entropy_checked(double purity) {
    if (purity < 1.0 / 3.0 - 1e-9 || purity > 1.0 + 1e-9) {
        throw std::runtime_error("reduced qutrit purity " + std::to_string(purity) +
                                 " is outside [1/3, 1]");
    }
    return 1.0 - purity;
}

double purity_from_reduced_wigner(const WignerFunction& evolved) {
    const WignerFunction reduced = marginal_qudit(evolved, 0);
    const ComplexMatrix rho1 = reconstruct_density(reduced);
    return (rho1 * rho1).trace().real();
}

}  // namespace

double purity_closed_form(double chi_t) {
    const double c1 = 1.0 + 2.0 * std::cos(chi_t);
    const double c2 = 1.0 + 2.0 * std::cos(2.0 * chi_t);
    return (27.0 + 4.0 * c1 * c1 + 2.0 * c2 * c2) / 81.0;
}

double linear_entropy_closed_form(double chi_t) { return 1.0 - purity_closed_form(chi_t); }

double short_time_linear_entropy(double chi_t) { return 8.0 * chi_t * chi_t / 9.0; }

double short_time_linear_entropy_general(double chi_t, double var_a, double var_b) {
    return 2.0 * chi_t * chi_t * var_a * var_b;
}

const char* to_string(EntanglementRoute r) {
    switch (r) {
        case EntanglementRoute::kDirectEvolution: return "exact";
        case EntanglementRoute::kWignerKernel: return "kernel";
        case EntanglementRoute::kPathIntegral: return "path_integral";
    }
    return "unknown";
}

ComplexMatrix two_qutrit_coupling() {
    const ComplexMatrix x = position_operator(qutrit());
    return kron(x, x);
}

RealVector two_qutrit_coupling_lattice() {
    const PhaseSpace space(qutrit(), 2);
    RealVector h(space.n_sites());
    for (int site = 0; site < space.n_sites(); ++site) {
        auto c = space.coords_of(site);  // (m1, n1, m2, n2)
        h(site) = static_cast<double>(c[0]) * c[2];
    }
    return h;
}

ComplexMatrix two_qutrit_product_state_density() {
    const ComplexVector p0 = momentum_state(qutrit(), 0);
    ComplexVector psi(9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) psi(i * 3 + j) = p0(i) * p0(j);
    }
    return density_from_state(psi);
}

EntanglementRecord linear_entropy_exact(double chi_t, EntanglementRoute route, int num_slices) {
    const PhaseSpace space(qutrit(), 2);
    const ComplexMatrix rho0 = two_qutrit_product_state_density();

    double purity = 0.0;
    std::string source = to_string(route);
    switch (route) {
        case EntanglementRoute::kDirectEvolution: {
            const ComplexMatrix u = hermitian_expm(two_qutrit_coupling(), Complex(0.0, -chi_t));
            const ComplexMatrix rho_t = u * rho0 * u.adjoint();
            const ComplexMatrix rho1 = partial_trace(rho_t, 0, {3, 3});
            purity = (rho1 * rho1).trace().real();
            break;
        }
        case EntanglementRoute::kWignerKernel: {
            const ComplexMatrix u = hermitian_expm(two_qutrit_coupling(), Complex(0.0, -chi_t));
            const WignerKernel g = kernel_fourier_form(u, space);
            const WignerFunction w_t = apply_kernel(g, wigner_function(rho0, space));
            purity = purity_from_reduced_wigner(w_t);
            break;
        }
        case EntanglementRoute::kPathIntegral: {
            const WignerKernel g =
                path_sum_kernel(two_qutrit_coupling_lattice(), num_slices, chi_t, space);
            const WignerFunction w_t = apply_kernel(g, wigner_function(rho0, space));
            purity = purity_from_reduced_wigner(w_t);
            source += "(" + std::to_string(num_slices) + ")";
            break;
        }
    }
    return EntanglementRecord{chi_t, purity, purity_to_entropy_checked(purity), source};
}

std::vector<EntanglementRecord> entanglement_table(std::span<const double> chi_ts, int num_slices) {
    std::vector<EntanglementRecord> out;
    for (double chi_t : chi_ts) {
        const double p = purity_closed_form(chi_t);
        out.push_back(EntanglementRecord{chi_t, p, 1.0 - p, "closed_form"});
        out.push_back(linear_entropy_exact(chi_t, EntanglementRoute::kDirectEvolution));
        out.push_back(linear_entropy_exact(chi_t, EntanglementRoute::kWignerKernel));
        out.push_back(linear_entropy_exact(chi_t, EntanglementRoute::kPathIntegral, num_slices));
    }
    return out;
}

}  // namespace qps
