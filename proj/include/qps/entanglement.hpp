#pragma once

#include <span>
#include <string>
#include <vector>

#include "qps/path_integral.hpp"

namespace qps {

// Two-qutrit scenario: |p,0> x |p,0> evolved under the dimensionless
// generator x1 x2, with the linear entropy of subsystem 1 as the witness.

// Tr[rho_1^2] = [27 + 4(1 + 2 cos(chi t))^2 + 2(1 + 2 cos(2 chi t))^2] / 81.
double purity_closed_form(double chi_t);
double linear_entropy_closed_form(double chi_t);

// Short-time law 8 (chi t)^2 / 9, and the general perturbative form
// 2 (chi t)^2 Var(A) Var(B); Var(x) = 2/3 on |p,0>.
double short_time_linear_entropy(double chi_t);
double short_time_linear_entropy_general(double chi_t, double var_a, double var_b);
inline constexpr double kMomentumStateVarX = 2.0 / 3.0;

enum class EntanglementRoute { kDirectEvolution, kWignerKernel, kPathIntegral };
const char* to_string(EntanglementRoute r);

struct EntanglementRecord {
    double chi_t = 0.0;
    double purity = 1.0;
    double linear_entropy = 0.0;
    std::string source;  // "exact" | "kernel" | "path_integral(N)" | "closed_form"
};

// Purity of the reduced qutrit via the requested route. The Wigner routes
// marginalize the evolved lattice function over qudit 2 and reconstruct
// rho_1 through the phase-point operators.
EntanglementRecord linear_entropy_exact(double chi_t, EntanglementRoute route, int num_slices = 4);

// All routes plus the closed form at each requested time.
std::vector<EntanglementRecord> entanglement_table(std::span<const double> chi_ts,
                                                   int num_slices = 4);

// Scenario pieces, exposed for the propagator and negativity checks.
ComplexMatrix two_qutrit_coupling();             // x1 x2, 9 x 9
RealVector two_qutrit_coupling_lattice();        // m1 * m2 over the 81 sites
ComplexMatrix two_qutrit_product_state_density();

}  // namespace qps
